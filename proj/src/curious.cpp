#include "framekit/curious.hpp"
#include "framekit/errors.hpp"

#include <json.hpp>

namespace framekit {

RowProfile make_profile(std::map<uint32_t, Height> exceptions, Height tail, Height star) {
    if (star > Height::of(0) && !tail.is_inf())
        throw SemanticError("not an open set: nonempty star row needs cofinitely many full rows");
    for (auto it = exceptions.begin(); it != exceptions.end();)
        it = (it->second == tail) ? exceptions.erase(it) : std::next(it);
    return RowProfile{std::move(exceptions), tail, star};
}

RowProfile profile_bottom() {
    return make_profile({}, Height::of(0), Height::of(0));
}

RowProfile profile_top() {
    return make_profile({}, Height::inf(), Height::inf());
}

RowProfile profile_omega_omega() {
    return make_profile({}, Height::inf(), Height::of(0));
}

namespace {

// Rows where either profile deviates from its tail; everything else is
// covered by the tail-vs-tail case.
std::map<uint32_t, char> exception_keys(const RowProfile& p, const RowProfile& q) {
    std::map<uint32_t, char> keys;
    for (const auto& [r, h] : p.exceptions)
        keys.emplace(r, 0);
    for (const auto& [r, h] : q.exceptions)
        keys.emplace(r, 0);
    return keys;
}

template <typename F>
RowProfile combine(const RowProfile& p, const RowProfile& q, F pick) {
    std::map<uint32_t, Height> exceptions;
    for (const auto& [r, unused] : exception_keys(p, q))
        exceptions.emplace(r, pick(p.row(r), q.row(r)));
    return make_profile(std::move(exceptions), pick(p.tail, q.tail), pick(p.star, q.star));
}

} // namespace

RowProfile profile_join(const RowProfile& p, const RowProfile& q) {
    return combine(p, q, [](Height a, Height b) { return std::max(a, b); });
}

RowProfile profile_meet(const RowProfile& p, const RowProfile& q) {
    return combine(p, q, [](Height a, Height b) { return std::min(a, b); });
}

bool profile_leq(const RowProfile& p, const RowProfile& q) {
    for (const auto& [r, unused] : exception_keys(p, q))
        if (p.row(r) > q.row(r))
            return false;
    return p.tail <= q.tail && p.star <= q.star;
}

bool profile_preceq(const RowProfile& U, const RowProfile& W) {
    for (const auto& [r, unused] : exception_keys(U, W))
        if (U.row(r).is_inf() && !W.row(r).is_inf())
            return false;
    if (U.tail.is_inf() && !W.tail.is_inf())
        return false;
    return !U.star.is_inf() || W.star.is_inf();
}

RowProfile profile_xi(const RowProfile& W) {
    if (W.tail.is_inf())
        return profile_top();
    return profile_omega_omega();
}

namespace {

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

Height random_height(SplitMix64& rng) {
    uint64_t pick = rng.below(5);
    return pick == 4 ? Height::inf() : Height::of(static_cast<uint32_t>(pick));
}

RowProfile random_profile(SplitMix64& rng) {
    Height tail = random_height(rng);
    Height star = Height::of(0);
    if (tail.is_inf()) {
        uint64_t pick = rng.below(4);
        star = pick == 3 ? Height::inf() : Height::of(static_cast<uint32_t>(pick));
    }
    std::map<uint32_t, Height> exceptions;
    uint64_t count = rng.below(4);
    for (uint64_t i = 0; i < count; ++i)
        exceptions[static_cast<uint32_t>(rng.below(8))] = random_height(rng);
    return make_profile(std::move(exceptions), tail, star);
}

} // namespace

CuriousReport demonstrate_not_nucleus(int samples, uint64_t seed) {
    CuriousReport report;
    report.seed = seed;
    report.xi_bottom = profile_xi(profile_bottom());
    report.xi2_bottom = profile_xi(report.xi_bottom);
    report.anchors_ok = serialize_profile(report.xi_bottom) ==
                            serialize_profile(profile_omega_omega()) &&
                        serialize_profile(report.xi2_bottom) == serialize_profile(profile_top());
    report.xi_is_nucleus = report.xi2_bottom == report.xi_bottom;

    SplitMix64 rng{seed ^ 0x5bf0363546e41397ULL};
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        RowProfile w = random_profile(rng);
        RowProfile u = random_profile(rng);
        RowProfile bigger = profile_join(w, random_profile(rng));

        bool ok = profile_leq(w, profile_xi(w));                               // inflationary
        ok = ok && profile_leq(profile_xi(w), profile_xi(bigger));             // monotone
        ok = ok && profile_xi(profile_meet(u, w)) ==
                       profile_meet(profile_xi(u), profile_xi(w));             // meet-preserving
        ok = ok && (!profile_preceq(u, w) || profile_leq(u, profile_xi(w)));   // domination
        ok = ok && (!profile_leq(u, w) || profile_preceq(u, w));               // refines leq
        if (!ok)
            ++report.law_failures;
    }
    return report;
}

namespace {

nlohmann::json height_to_json(Height h) {
    if (h.is_inf())
        return "inf";
    return h.raw;
}

Height height_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf")
            return Height::inf();
        throw ParseError("height must be a nonnegative integer or \"inf\"");
    }
    if (!j.is_number_unsigned())
        throw ParseError("height must be a nonnegative integer or \"inf\"");
    uint64_t v = j.get<uint64_t>();
    if (v >= Height::kInf)
        throw ParseError("height is out of range");
    return Height::of(static_cast<uint32_t>(v));
}

} // namespace

std::string serialize_profile(const RowProfile& p) {
    nlohmann::json j;
    j["exceptions"] = nlohmann::json::object();
    for (const auto& [r, h] : p.exceptions)
        j["exceptions"][std::to_string(r)] = height_to_json(h);
    j["tail"] = height_to_json(p.tail);
    j["star"] = height_to_json(p.star);
    return j.dump();
}

RowProfile parse_profile(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("profile is not valid JSON");
    if (!j.is_object() || !j.contains("exceptions") || !j.contains("tail") || !j.contains("star"))
        throw ParseError("profile must be an object with 'exceptions', 'tail' and 'star'");
    if (!j["exceptions"].is_object())
        throw ParseError("'exceptions' must be an object keyed by row number");
    std::map<uint32_t, Height> exceptions;
    for (const auto& [key, value] : j["exceptions"].items()) {
        size_t used = 0;
        unsigned long row = 0;
        try {
            row = std::stoul(key, &used);
        } catch (const std::exception&) {
            throw ParseError("exception key '" + key + "' is not a row number");
        }
        if (used != key.size() || row >= Height::kInf)
            throw ParseError("exception key '" + key + "' is not a row number");
        exceptions[static_cast<uint32_t>(row)] = height_from_json(value);
    }
    return make_profile(std::move(exceptions), height_from_json(j["tail"]),
                        height_from_json(j["star"]));
}

} // namespace framekit
