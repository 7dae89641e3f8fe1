#ifndef FRAMEKIT_CURIOUS_HPP
#define FRAMEKIT_CURIOUS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace framekit {

/// A column height: how much of a row an open set covers. A natural
/// number h stands for the downward-closed column set [0, h); INFINITY
/// stands for the whole row.
struct Height {
    uint32_t raw = 0;
    static constexpr uint32_t kInf = ~uint32_t{0};

    static constexpr Height inf() { return Height{kInf}; }
    static constexpr Height of(uint32_t v) { return Height{v}; }
    bool is_inf() const { return raw == kInf; }

    friend auto operator<=>(Height, Height) = default;
};

/// An open set of the example space: the plane has rows indexed by the
/// naturals plus one star row, and an open assigns every row a
/// downward-closed column set. Only eventually-constant assignments are
/// representable: finitely many exception rows, one tail height for all
/// remaining natural rows, and the star row's height.
///
/// Openness: a nonempty star row forces cofinitely many full rows, i.e.
/// star > 0 implies tail = INFINITY. Canonical form: no exception ever
/// holds the tail value.
struct RowProfile {
    std::map<uint32_t, Height> exceptions;
    Height tail;
    Height star;

    Height row(uint32_t r) const {
        auto it = exceptions.find(r);
        return it == exceptions.end() ? tail : it->second;
    }

    friend bool operator==(const RowProfile&, const RowProfile&) = default;
};

/// Canonicalizes (drops exceptions equal to the tail) and checks the
/// openness invariant; throws SemanticError on violation.
RowProfile make_profile(std::map<uint32_t, Height> exceptions, Height tail, Height star);

RowProfile profile_bottom();      // the empty set
RowProfile profile_top();         // the whole space
RowProfile profile_omega_omega(); // every natural row full, star row empty

RowProfile profile_join(const RowProfile& p, const RowProfile& q);
RowProfile profile_meet(const RowProfile& p, const RowProfile& q);

/// Rowwise comparison over all rows, decided by finite case analysis on
/// the exception keys, the tails, and the star row.
bool profile_leq(const RowProfile& p, const RowProfile& q);

/// The rather-below criterion specialized to this space: U is rather
/// below W iff every row where U is full is also full in W. This is the
/// point criterion evaluated exactly — the closure of a point is the
/// final segment of its own row, so a closure fits inside U exactly on
/// U's full rows (see README for the three row cases).
bool profile_preceq(const RowProfile& U, const RowProfile& W);

/// xi in closed form: the join of all opens rather below W. If W's full
/// rows are cofinite this is the whole space; otherwise it is every
/// natural row full with the star row empty.
RowProfile profile_xi(const RowProfile& W);

/// The headline computation: xi applied to the empty set twice. The first
/// application fills exactly the natural rows, the second reaches the
/// star row, so xi is strictly below its square and is not a nucleus.
/// Also runs randomized pre-nucleus law checks (inflationary, monotone,
/// meet-preserving, rather-below domination) on sampled profiles.
struct CuriousReport {
    RowProfile xi_bottom;
    RowProfile xi2_bottom;
    bool anchors_ok = false;  // both anchors byte-exact
    bool xi_is_nucleus = true; // false: xi2 differs from xi at bottom
    int samples = 0;
    int law_failures = 0;
    uint64_t seed = 0;
};

CuriousReport demonstrate_not_nucleus(int samples = 1000, uint64_t seed = 0);

/// Profile JSON: {"exceptions": {"<row>": h, ...}, "tail": h, "star": h}
/// with heights as nonnegative integers or the string "inf".
std::string serialize_profile(const RowProfile& p);
RowProfile parse_profile(std::string_view text);

} // namespace framekit

#endif
