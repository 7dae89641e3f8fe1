#ifndef FRAMEKIT_TOPOLOGY_HPP
#define FRAMEKIT_TOPOLOGY_HPP

#include "framekit/lattice.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace framekit {

inline constexpr int kDefaultPointCap = 12;

/// A finite topological space: labeled points plus an explicit family of
/// open sets stored as bitmasks over the points. The family always
/// contains the empty and full sets and is closed under binary union and
/// intersection (which suffices in the finite case).
struct FiniteSpace {
    std::vector<std::string> point_labels;
    std::vector<uint32_t> opens; // sorted by (popcount, value)

    int points() const { return static_cast<int>(point_labels.size()); }
    uint32_t full_mask() const {
        return points() == 32 ? ~uint32_t{0} : (uint32_t{1} << points()) - 1;
    }
    bool is_open(uint32_t mask) const;
    int open_index(uint32_t mask) const; // -1 if not open
};

/// An open set of a particular space.
struct OpenSet {
    const FiniteSpace* space = nullptr;
    uint32_t members = 0;
};

/// Throws PreconditionError unless the mask is one of the space's opens.
OpenSet open_set(const FiniteSpace& S, uint32_t mask);

/// Checks the topology axioms and returns the space with its opens in
/// canonical order. Throws SemanticError naming the failed axiom.
FiniteSpace validate_space(std::vector<std::string> point_labels, std::vector<uint32_t> opens,
                           int point_cap = kDefaultPointCap);

/// The frame of opens under inclusion. Always distributive.
FiniteLattice opens_frame(const FiniteSpace& S);

/// Closure of a single point: everything whose every open neighbourhood
/// contains p.
uint32_t point_closure(const FiniteSpace& S, int p);

/// The point-level rather-below criterion: U is rather below W iff no
/// point of U \ W has its closure inside U.
bool preceq_points(const FiniteSpace& S, const OpenSet& U, const OpenSet& W);

/// The spectrum of a finite distributive lattice as a space: points are
/// prime ideals, opens are generated by the basic sets
/// D(a) = { primes not containing a } closed under union/intersection.
/// The opens frame is verified isomorphic to D via a |-> D(a).
FiniteSpace spec_space(const FiniteLattice& D);

/// Jacobson space: every closed set is the closure of its closed points.
bool is_jacobson_space(const FiniteSpace& S);

/// Space document JSON: {"points": [...], "opens": [[point, ...], ...]}.
FiniteSpace parse_space_document(std::string_view text, int point_cap = kDefaultPointCap);
std::string serialize_space(const FiniteSpace& S);

} // namespace framekit

#endif
