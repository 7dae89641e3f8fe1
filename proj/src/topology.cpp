#include "framekit/topology.hpp"
#include "framekit/errors.hpp"
#include "framekit/ideal.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include <json.hpp>

namespace framekit {

namespace {

void sort_opens(std::vector<uint32_t>& opens) {
    std::sort(opens.begin(), opens.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
}

std::string mask_label(const FiniteSpace& S, uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int p = 0; p < S.points(); ++p)
        if (mask & (uint32_t{1} << p)) {
            if (!first) out += ",";
            out += S.point_labels[p];
            first = false;
        }
    return out + "}";
}

} // namespace

bool FiniteSpace::is_open(uint32_t mask) const {
    return std::find(opens.begin(), opens.end(), mask) != opens.end();
}

int FiniteSpace::open_index(uint32_t mask) const {
    auto it = std::find(opens.begin(), opens.end(), mask);
    return it == opens.end() ? -1 : static_cast<int>(it - opens.begin());
}

OpenSet open_set(const FiniteSpace& S, uint32_t mask) {
    if (!S.is_open(mask))
        throw PreconditionError("set " + mask_label(S, mask) + " is not open in the space");
    return OpenSet{&S, mask};
}

FiniteSpace validate_space(std::vector<std::string> point_labels, std::vector<uint32_t> opens,
                           int point_cap) {
    const int n = static_cast<int>(point_labels.size());
    if (n > point_cap)
        throw CapError("space has " + std::to_string(n) + " points, cap is " +
                       std::to_string(point_cap));
    std::set<std::string> names(point_labels.begin(), point_labels.end());
    if (static_cast<int>(names.size()) != n)
        throw SemanticError("duplicate point name");

    FiniteSpace S;
    S.point_labels = std::move(point_labels);
    const uint32_t full = S.full_mask();
    for (uint32_t o : opens)
        if (o & ~full)
            throw SemanticError("open set references a point outside the space");
    sort_opens(opens);
    std::set<uint32_t> family(opens.begin(), opens.end());
    if (!family.count(0))
        throw SemanticError("topology is missing the empty set");
    if (!family.count(full))
        throw SemanticError("topology is missing the full set");
    for (uint32_t a : opens)
        for (uint32_t b : opens) {
            if (!family.count(a | b))
                throw SemanticError("topology is not closed under union: " + mask_label(S, a) +
                                    " with " + mask_label(S, b));
            if (!family.count(a & b))
                throw SemanticError("topology is not closed under intersection: " +
                                    mask_label(S, a) + " with " + mask_label(S, b));
        }
    S.opens = std::move(opens);
    return S;
}

FiniteLattice opens_frame(const FiniteSpace& S) {
    const int n = static_cast<int>(S.opens.size());
    std::unordered_map<uint32_t, int> pos;
    for (int i = 0; i < n; ++i)
        pos.emplace(S.opens[i], i);

    FiniteLattice L;
    L.poset.size = n;
    L.poset.leq.assign(static_cast<size_t>(n) * n, 0);
    L.poset.labels.resize(n);
    L.meet_table.resize(static_cast<size_t>(n) * n);
    L.join_table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        L.poset.labels[i] = mask_label(S, S.opens[i]);
        for (int j = 0; j < n; ++j) {
            if ((S.opens[i] & ~S.opens[j]) == 0)
                L.poset.leq[static_cast<size_t>(i) * n + j] = 1;
            L.meet_table[static_cast<size_t>(i) * n + j] = pos.at(S.opens[i] & S.opens[j]);
            L.join_table[static_cast<size_t>(i) * n + j] = pos.at(S.opens[i] | S.opens[j]);
        }
    }
    L.bot = pos.at(0);
    L.top = pos.at(S.full_mask());
    return L;
}

uint32_t point_closure(const FiniteSpace& S, int p) {
    uint32_t closure = 0;
    for (int q = 0; q < S.points(); ++q) {
        bool in = true;
        for (uint32_t o : S.opens)
            if ((o & (uint32_t{1} << q)) && !(o & (uint32_t{1} << p))) {
                in = false;
                break;
            }
        if (in)
            closure |= uint32_t{1} << q;
    }
    return closure;
}

bool preceq_points(const FiniteSpace& S, const OpenSet& U, const OpenSet& W) {
    if (U.space != &S || W.space != &S)
        throw PreconditionError("preceq_points: open sets from a different space");
    const uint32_t diff = U.members & ~W.members;
    for (int u = 0; u < S.points(); ++u) {
        if (!(diff & (uint32_t{1} << u)))
            continue;
        if ((point_closure(S, u) & ~U.members) == 0)
            return false; // u's closure is inside U
    }
    return true;
}

FiniteSpace spec_space(const FiniteLattice& D) {
    PrimeSpectrum spec = prime_ideals(D);
    const int k = spec.count();
    if (k > 31)
        throw CapError("spectrum has more than 31 points");

    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i)
        labels[i] = D.label(spec.primes[i].generator);

    std::vector<uint32_t> basic(D.size(), 0);
    for (int a = 0; a < D.size(); ++a)
        for (int i = 0; i < k; ++i)
            if (!spec.primes[i].contains(a))
                basic[a] |= uint32_t{1} << i;

    // Close the basic sets under union and intersection. For the spectrum
    // this adds nothing new, but the explicit family is the contract.
    std::set<uint32_t> family(basic.begin(), basic.end());
    family.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint32_t> snapshot(family.begin(), family.end());
        for (uint32_t a : snapshot)
            for (uint32_t b : snapshot) {
                if (family.insert(a | b).second)
                    grew = true;
                if (family.insert(a & b).second)
                    grew = true;
            }
    }
    std::vector<uint32_t> opens(family.begin(), family.end());
    FiniteSpace S = validate_space(std::move(labels), std::move(opens), 31);

    // a |-> D(a) must be an order isomorphism onto the opens.
    if (static_cast<int>(S.opens.size()) != D.size())
        throw ConsistencyError("spectrum opens do not match the lattice size");
    for (int a = 0; a < D.size(); ++a) {
        if (!S.is_open(basic[a]))
            throw ConsistencyError("basic open missing from the spectrum topology");
        for (int b = 0; b < D.size(); ++b) {
            bool subset = (basic[a] & ~basic[b]) == 0;
            if (subset != D.less_eq(a, b))
                throw ConsistencyError("spectrum topology does not mirror the lattice order");
        }
    }
    return S;
}

bool is_jacobson_space(const FiniteSpace& S) {
    std::vector<uint32_t> closures(S.points());
    uint32_t closed_points = 0;
    for (int p = 0; p < S.points(); ++p) {
        closures[p] = point_closure(S, p);
        if (closures[p] == (uint32_t{1} << p))
            closed_points |= uint32_t{1} << p;
    }
    for (uint32_t o : S.opens) {
        const uint32_t closed = S.full_mask() & ~o;
        uint32_t closure_of_closed_points = 0;
        for (int p = 0; p < S.points(); ++p)
            if ((closed & closed_points) & (uint32_t{1} << p))
                closure_of_closed_points |= closures[p];
        if (closure_of_closed_points != closed)
            return false;
    }
    return true;
}

FiniteSpace parse_space_document(std::string_view text, int point_cap) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("space document is not valid JSON");
    if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
        throw ParseError("space document must be an object with 'points' and 'opens'");
    if (!j["points"].is_array() || !j["opens"].is_array())
        throw ParseError("'points' and 'opens' must be arrays");

    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    for (const auto& p : j["points"]) {
        if (!p.is_string())
            throw ParseError("point names must be strings");
        index.emplace(p.get<std::string>(), static_cast<int>(labels.size()));
        labels.push_back(p.get<std::string>());
    }
    std::vector<uint32_t> opens;
    for (const auto& o : j["opens"]) {
        if (!o.is_array())
            throw ParseError("each open must be an array of point names");
        uint32_t mask = 0;
        for (const auto& p : o) {
            if (!p.is_string())
                throw ParseError("each open must be an array of point names");
            auto it = index.find(p.get<std::string>());
            if (it == index.end())
                throw SemanticError("open set references undeclared point '" +
                                    p.get<std::string>() + "'");
            mask |= uint32_t{1} << it->second;
        }
        opens.push_back(mask);
    }
    return validate_space(std::move(labels), std::move(opens), point_cap);
}

std::string serialize_space(const FiniteSpace& S) {
    nlohmann::json j;
    j["points"] = S.point_labels;
    j["opens"] = nlohmann::json::array();
    for (uint32_t o : S.opens) {
        nlohmann::json names = nlohmann::json::array();
        for (int p = 0; p < S.points(); ++p)
            if (o & (uint32_t{1} << p))
                names.push_back(S.point_labels[p]);
        j["opens"].push_back(names);
    }
    return j.dump();
}

} // namespace framekit
