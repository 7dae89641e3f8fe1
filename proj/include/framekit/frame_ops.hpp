#ifndef FRAMEKIT_FRAME_OPS_HPP
#define FRAMEKIT_FRAME_OPS_HPP

#include "framekit/lattice.hpp"

#include <vector>

namespace framekit {

inline constexpr int kDefaultEnumCap = 7;

/// A total self-map of a lattice. The base lattice must outlive the
/// operator; operators are plain tables with value semantics.
struct Operator {
    const FiniteLattice* base = nullptr;
    std::vector<int> table;

    int apply(int e) const { return table[e]; }
};

Operator identity_operator(const FiniteLattice& L);
Operator constant_top_operator(const FiniteLattice& L);

/// A reflexive transitive relation on a lattice, refining its order.
struct PreorderRelation {
    const FiniteLattice* base = nullptr;
    std::vector<uint8_t> rel; // row-major

    bool holds(int a, int b) const { return rel[static_cast<size_t>(a) * base->size() + b] != 0; }
};

/// Whether a is rather below b: every c that joins with a to top also
/// joins with b to top. Decided by exhaustive quantification over c.
/// Requires a distributive lattice.
bool rather_below(const FiniteLattice& L, int a, int b);

/// The full rather-below table. Reflexive, transitive, contains leq.
PreorderRelation preceq_relation(const FiniteLattice& L);

/// xi(a): the join of all b rather below a. Inflationary; the identity
/// exactly on subfit lattices.
int xi(const FiniteLattice& L, int a);

/// xi as a full operator table (one preceq computation for all elements).
Operator xi_operator(const FiniteLattice& L);

/// Inflationary and monotone.
bool is_inflator(const Operator& op);
/// Inflator with f(a) /\ f(b) <= f(a /\ b). Monotonicity makes the
/// inequality an equality, so only one direction is checked.
bool is_prenucleus(const Operator& op);
/// Idempotent pre-nucleus.
bool is_nucleus(const Operator& op);

/// f admits a when f(a) = top. True iff f admits only top itself.
bool admits_only_top(const Operator& op);

/// Pointwise join of a nonempty family over one lattice.
Operator pointwise_join(const std::vector<Operator>& ops);

struct ClosureResult {
    Operator closure;
    int steps = 0; // least k with op^(k+1) = op^k
};

/// Iterates an inflator to its idempotent closure by successor steps.
/// On a finite lattice the pointwise ascent terminates within
/// size*size steps; limit stages never arise.
ClosureResult iterate_to_closure(const Operator& op);

/// Subfit: the rather-below relation coincides with the order.
/// Computed two independent ways (preceq == leq, and xi == identity);
/// disagreement raises ConsistencyError.
bool is_subfit(const FiniteLattice& L);

/// For b rather below a, builds the nucleus g with
///   g(c) = join of { x : x <= b \/ c  and  x /\ a <= c }.
/// The result is verified to be a nucleus admitting only top with
/// b <= g(a); a failed verification raises ConsistencyError.
Operator witness_nucleus(const FiniteLattice& L, int a, int b);

/// All nuclei that admit only top, by exhaustive search over inflationary
/// self-maps (monotonicity and the admit constraint prune the tree).
/// Returned in lexicographic table order. Capped because the raw space is
/// |L|^|L|.
std::vector<Operator> enumerate_Fn(const FiniteLattice& L, int cap = kDefaultEnumCap);

/// Whether the pointwise join of enumerate_Fn equals xi's table exactly.
/// On a finite distributive lattice the join is itself a nucleus (xi is
/// idempotent here); on general frames the join of all nuclei admitting
/// only top need not be a nucleus — the curious-space module exhibits the
/// failure, no finite lattice can.
bool theorem2_check(const FiniteLattice& L, int cap = kDefaultEnumCap);

/// Cartesian product of frames: meets and joins are coordinatewise, and
/// so is the rather-below relation, hence xi acts coordinatewise too.
struct FrameProduct {
    FiniteLattice lattice;
    int left_size = 0;
    int right_size = 0;

    int pair_index(int a, int b) const { return a * right_size + b; }
    int left(int e) const { return e / right_size; }
    int right(int e) const { return e % right_size; }
};

FrameProduct frame_product(const FiniteLattice& A, const FiniteLattice& B,
                           int size_cap = kDefaultSizeCap);

} // namespace framekit

#endif
