#ifndef FRAMEKIT_POSET_HPP
#define FRAMEKIT_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace framekit {

/// A finite partial order on elements 0..size-1, stored as a dense
/// relation table. Immutable after construction.
struct FinitePoset {
    int size = 0;
    std::vector<uint8_t> leq;          // row-major: leq[a*size+b] != 0 iff a <= b
    std::vector<std::string> labels;   // one per element

    bool less_eq(int a, int b) const { return leq[static_cast<size_t>(a) * size + b] != 0; }
    const std::string& label(int e) const { return labels[e]; }
};

/// Throws SemanticError unless leq is reflexive, antisymmetric and
/// transitive, size >= 1 and labels line up.
void validate_poset(const FinitePoset& p);

/// In-place reflexive-transitive closure of an arbitrary relation table.
void reflexive_transitive_closure(std::vector<uint8_t>& rel, int n);

/// All posets on n labeled elements, one representative per isomorphism
/// class. Enumerates upper-triangular edge sets (every finite poset has a
/// topological labeling), closes them, and deduplicates by the minimal
/// relation table over all permutations. n is capped at 7.
std::vector<FinitePoset> enumerate_posets(int n);

} // namespace framekit

#endif
