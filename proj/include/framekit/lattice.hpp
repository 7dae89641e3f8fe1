#ifndef FRAMEKIT_LATTICE_HPP
#define FRAMEKIT_LATTICE_HPP

#include "framekit/document.hpp"
#include "framekit/poset.hpp"

#include <utility>
#include <vector>

namespace framekit {

inline constexpr int kDefaultSizeCap = 4096;

/// A finite bounded lattice: an order plus total meet/join tables.
/// Everything downstream (frames, spectra, spaces) lives on this type.
struct FiniteLattice {
    FinitePoset poset;
    std::vector<int> meet_table; // row-major element indices
    std::vector<int> join_table;
    int bot = 0;
    int top = 0;

    int size() const { return poset.size; }
    bool less_eq(int a, int b) const { return poset.less_eq(a, b); }
    int meet(int a, int b) const { return meet_table[static_cast<size_t>(a) * size() + b]; }
    int join(int a, int b) const { return join_table[static_cast<size_t>(a) * size() + b]; }
    const std::string& label(int e) const { return poset.label(e); }
    int index_of(const std::string& name) const; // -1 if absent
};

/// Completes a validated poset into a lattice: finds the global bounds,
/// then computes meet/join tables. Throws LatticeError if bounds are
/// missing ("no global bounds") or some pair lacks a unique meet or join
/// ("not a lattice").
FiniteLattice lattice_from_poset(FinitePoset poset);

/// Document -> lattice. Validates the document, takes the reflexive
/// transitive closure of its covers, enforces the size cap, and completes
/// the order into a lattice.
FiniteLattice build_lattice(const LatticeDocument& doc, int size_cap = kDefaultSizeCap);

/// True iff meet distributes over join for all triples. Binary
/// distributivity suffices on a finite lattice (and is self-dual).
bool check_distributive(const FiniteLattice& L);

/// The lattice of downward-closed subsets of P, ordered by inclusion.
/// Always distributive. Element labels are brace lists of P's labels.
FiniteLattice downset_lattice(const FinitePoset& P, int size_cap = kDefaultSizeCap);

struct Irreducibles {
    std::vector<int> join_irreducible; // exactly one lower cover
    std::vector<int> meet_irreducible; // exactly one upper cover
    std::vector<int> coatoms;          // lower covers of top
    std::vector<int> atoms;            // upper covers of bot
};

Irreducibles irreducibles(const FiniteLattice& L);

/// Hasse diagram edges (lower, upper), sorted by index pair.
std::vector<std::pair<int, int>> cover_pairs(const FiniteLattice& L);

/// Canonical document for a built lattice (elements in index order, covers
/// from the Hasse diagram).
LatticeDocument canonical_document(const FiniteLattice& L);

/// The one-element lattice (bot = top).
FiniteLattice trivial_lattice();

/// The standard test corpus: the one-element lattice plus the downset
/// lattice of every poset with 1..max_poset_size elements (one per
/// isomorphism class). Every member is distributive.
std::vector<FiniteLattice> downset_corpus(int max_poset_size);

} // namespace framekit

#endif
