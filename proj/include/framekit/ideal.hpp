#ifndef FRAMEKIT_IDEAL_HPP
#define FRAMEKIT_IDEAL_HPP

#include "framekit/frame_ops.hpp"
#include "framekit/lattice.hpp"

#include <vector>

namespace framekit {

inline constexpr int kDefaultCongCap = 8;

/// An ideal of a finite lattice: downward closed, closed under binary
/// join, nonempty. Every such ideal is the principal downset of its
/// maximum, so only the generator is stored; the set view is materialized
/// on demand.
struct Ideal {
    const FiniteLattice* base = nullptr;
    int generator = 0;

    bool contains(int e) const { return base->less_eq(e, generator); }
    std::vector<uint8_t> members() const;

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.base == b.base && a.generator == b.generator;
    }
};

Ideal principal_ideal(const FiniteLattice& D, int a);

/// Checks that `members` really is an ideal and returns it by generator.
Ideal ideal_from_members(const FiniteLattice& D, const std::vector<uint8_t>& members);

/// The prime ideals of D with their containment (specialization) order
/// and maximality flags. Primes are found twice — as downsets of
/// meet-irreducibles and by the set-theoretic definition — and the two
/// answers must agree.
struct PrimeSpectrum {
    const FiniteLattice* base = nullptr;
    std::vector<Ideal> primes;
    std::vector<uint8_t> specialization; // k x k: primes[i] subset of primes[j]
    std::vector<uint8_t> maximal_flags;  // per prime

    int count() const { return static_cast<int>(primes.size()); }
    bool specializes(int i, int j) const {
        return specialization[static_cast<size_t>(i) * primes.size() + j] != 0;
    }
};

PrimeSpectrum prime_ideals(const FiniteLattice& D);

/// xi on the ideal frame, computed three independent ways and checked for
/// agreement: the quantifier formula
///   a in xi(I)  iff  for all b, a \/ b = top implies some c in I has
///   c \/ b = top;
/// the intersection of maximal ideals containing I (empty intersection is
/// all of D); and the frame xi of the generator. Disagreement raises
/// ConsistencyError.
Ideal xi_ideal(const FiniteLattice& D, const Ideal& I);

/// chi(I): union over c in I of { a : a rather below c }, with the
/// rather-below relation of D itself. Always contained in xi(I).
Ideal chi_ideal(const FiniteLattice& D, const Ideal& I);

/// A lattice congruence: a partition compatible with meet and join.
/// Class ids are dense and ordered by first occurrence.
struct Congruence {
    const FiniteLattice* base = nullptr;
    std::vector<int> class_of;
    int num_classes = 0;

    bool same(int a, int b) const { return class_of[a] == class_of[b]; }
};

/// Checks compatibility of an arbitrary partition; false if it is not a
/// congruence.
bool is_congruence(const FiniteLattice& D, const std::vector<int>& class_of);

/// The congruence identifying a and b when each is rather below the
/// other. Its top class is always the singleton {top}, and it is the
/// largest congruence with that property.
Congruence heitmann_congruence(const FiniteLattice& D);

/// D modulo a congruence, with the projection map. The projection is a
/// surjective lattice homomorphism and the quotient of a distributive
/// lattice is distributive; both are verified.
struct QuotientLattice {
    FiniteLattice lattice;
    std::vector<int> projection; // element of D -> element of quotient
};

QuotientLattice quotient(const FiniteLattice& D, const Congruence& c);

/// Every congruence of D, by filtering all partitions (restricted growth
/// strings) for compatibility. Bell(cap) partitions are generated.
std::vector<Congruence> enumerate_congruences(const FiniteLattice& D, int cap = kDefaultCongCap);

/// The Heitmann congruence has a singleton top class and every congruence
/// with a singleton top class refines it.
bool check_top_lemma(const FiniteLattice& D, int cap = kDefaultCongCap);

/// The four equivalent Jacobson conditions, evaluated independently:
/// every prime ideal is an intersection of maximal ideals; every ideal
/// is; the ideal frame is subfit (xi is the identity); the spectrum is a
/// Jacobson space.
struct JacobsonConditions {
    bool primes_are_intersections = false;
    bool ideals_are_intersections = false;
    bool ideal_frame_subfit = false;
    bool spectrum_jacobson_space = false;

    bool agree() const {
        return primes_are_intersections == ideals_are_intersections &&
               primes_are_intersections == ideal_frame_subfit &&
               primes_are_intersections == spectrum_jacobson_space;
    }
};

JacobsonConditions jacobson_conditions(const FiniteLattice& D);

/// Jacobson lattice check: evaluates all four conditions and raises
/// ConsistencyError unless they agree.
bool is_jacobson(const FiniteLattice& D);

/// Primes stable under a congruence (a in I and a ~ b imply b in I),
/// verified against the preimages of the quotient's primes.
std::vector<Ideal> stable_primes(const FiniteLattice& D, const Congruence& c);

/// The stable primes of the Heitmann congruence contain all maximal
/// ideals and are contained in the stable primes of every congruence
/// whose stable primes contain all maximal ideals (least such subspace).
bool check_chi_characterisation(const FiniteLattice& D, int cap = kDefaultCongCap);

/// chi = xi pointwise over all ideals iff the Heitmann quotient is a
/// Jacobson lattice. Both sides are evaluated; a failed biconditional
/// raises ConsistencyError. Returns whether chi = xi.
bool check_chi_equals_xi(const FiniteLattice& D);

} // namespace framekit

#endif
