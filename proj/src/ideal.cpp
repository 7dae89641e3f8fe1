#include "framekit/ideal.hpp"
#include "framekit/errors.hpp"
#include "framekit/topology.hpp"

#include <algorithm>
#include <set>

namespace framekit {

namespace {

void require_distributive(const FiniteLattice& D, const char* who) {
    if (!check_distributive(D))
        throw PreconditionError(std::string(who) + " requires a distributive lattice");
}

std::vector<uint8_t> downset_members(const FiniteLattice& D, int g) {
    std::vector<uint8_t> m(D.size(), 0);
    for (int e = 0; e < D.size(); ++e)
        if (D.less_eq(e, g))
            m[e] = 1;
    return m;
}

} // namespace

std::vector<uint8_t> Ideal::members() const {
    return downset_members(*base, generator);
}

Ideal principal_ideal(const FiniteLattice& D, int a) {
    require_distributive(D, "principal_ideal");
    return Ideal{&D, a};
}

Ideal ideal_from_members(const FiniteLattice& D, const std::vector<uint8_t>& members) {
    int gen = -1;
    for (int e = 0; e < D.size(); ++e) {
        if (!members[e])
            continue;
        if (gen == -1 || D.less_eq(gen, e))
            gen = e;
    }
    if (gen == -1)
        throw ConsistencyError("ideal is empty");
    if (downset_members(D, gen) != members)
        throw ConsistencyError("member set is not a principal downset");
    // downward closure implies the set is its generator's downset, and a
    // downset is join-closed only if the generator dominates everything;
    // both were just checked at once.
    return Ideal{&D, gen};
}

PrimeSpectrum prime_ideals(const FiniteLattice& D) {
    require_distributive(D, "prime_ideals");
    const int n = D.size();

    // Route one: downsets of meet-irreducibles, maximal ideals from coatoms.
    Irreducibles irr = irreducibles(D);
    std::set<int> by_irreducibles(irr.meet_irreducible.begin(), irr.meet_irreducible.end());
    std::set<int> maximal_by_coatoms(irr.coatoms.begin(), irr.coatoms.end());

    // Route two: the definitions, checked set-theoretically over all
    // proper ideals (every ideal of a finite lattice is some downset).
    std::set<int> by_definition;
    std::set<int> maximal_by_definition;
    for (int g = 0; g < n; ++g) {
        if (g == D.top)
            continue; // proper ideals only
        bool prime = true;
        for (int a = 0; a < n && prime; ++a)
            for (int b = 0; b < n; ++b)
                if (D.less_eq(D.meet(a, b), g) && !D.less_eq(a, g) && !D.less_eq(b, g)) {
                    prime = false;
                    break;
                }
        if (prime)
            by_definition.insert(g);
        bool maximal = true;
        for (int h = 0; h < n && maximal; ++h)
            if (h != D.top && h != g && D.less_eq(g, h))
                maximal = false;
        if (maximal)
            maximal_by_definition.insert(g);
    }
    if (by_irreducibles != by_definition)
        throw ConsistencyError("prime ideals: meet-irreducible route disagrees with definition");
    if (maximal_by_coatoms != maximal_by_definition)
        throw ConsistencyError("maximal ideals: coatom route disagrees with definition");

    PrimeSpectrum spec;
    spec.base = &D;
    for (int g : by_definition)
        spec.primes.push_back(Ideal{&D, g});
    const size_t k = spec.primes.size();
    spec.specialization.assign(k * k, 0);
    spec.maximal_flags.assign(k, 0);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j)
            if (D.less_eq(spec.primes[i].generator, spec.primes[j].generator))
                spec.specialization[i * k + j] = 1;
        if (maximal_by_definition.count(spec.primes[i].generator))
            spec.maximal_flags[i] = 1;
    }
    return spec;
}

namespace {

std::vector<uint8_t> intersect_maximals_containing(const FiniteLattice& D,
                                                   const PrimeSpectrum& spec,
                                                   const std::vector<uint8_t>& members) {
    // Empty intersection is all of D (only I = D has no maximal ideal
    // above it in a finite lattice).
    std::vector<uint8_t> acc(D.size(), 1);
    for (int i = 0; i < spec.count(); ++i) {
        if (!spec.maximal_flags[i])
            continue;
        std::vector<uint8_t> max_members = spec.primes[i].members();
        bool contains_I = true;
        for (int e = 0; e < D.size() && contains_I; ++e)
            if (members[e] && !max_members[e])
                contains_I = false;
        if (!contains_I)
            continue;
        for (int e = 0; e < D.size(); ++e)
            acc[e] = acc[e] && max_members[e];
    }
    return acc;
}

} // namespace

Ideal xi_ideal(const FiniteLattice& D, const Ideal& I) {
    require_distributive(D, "xi_ideal");
    const int n = D.size();
    std::vector<uint8_t> members = I.members();

    // (i) the quantifier formula
    std::vector<uint8_t> by_formula(n, 0);
    for (int a = 0; a < n; ++a) {
        bool in = true;
        for (int b = 0; b < n && in; ++b) {
            if (D.join(a, b) != D.top)
                continue;
            bool witness = false;
            for (int c = 0; c < n && !witness; ++c)
                if (members[c] && D.join(c, b) == D.top)
                    witness = true;
            in = witness;
        }
        by_formula[a] = in;
    }

    // (ii) intersection of maximal ideals containing I
    PrimeSpectrum spec = prime_ideals(D);
    std::vector<uint8_t> by_maximals = intersect_maximals_containing(D, spec, members);

    // (iii) frame xi applied to the generator
    std::vector<uint8_t> by_frame = downset_members(D, xi(D, I.generator));

    if (by_formula != by_maximals)
        throw ConsistencyError("xi_ideal: formula route disagrees with maximal-ideal route");
    if (by_formula != by_frame)
        throw ConsistencyError("xi_ideal: formula route disagrees with frame xi route");
    return ideal_from_members(D, by_formula);
}

Ideal chi_ideal(const FiniteLattice& D, const Ideal& I) {
    require_distributive(D, "chi_ideal");
    const int n = D.size();
    PreorderRelation preceq = preceq_relation(D);
    std::vector<uint8_t> members = I.members();
    std::vector<uint8_t> result(n, 0);
    for (int c = 0; c < n; ++c) {
        if (!members[c])
            continue;
        for (int a = 0; a < n; ++a)
            if (preceq.holds(a, c))
                result[a] = 1;
    }
    Ideal out = ideal_from_members(D, result);
    std::vector<uint8_t> xi_members = xi_ideal(D, I).members();
    for (int e = 0; e < n; ++e)
        if (result[e] && !xi_members[e])
            throw ConsistencyError("chi_ideal is not contained in xi_ideal");
    return out;
}

bool is_congruence(const FiniteLattice& D, const std::vector<int>& class_of) {
    const int n = D.size();
    // a ~ b implies a op c ~ b op c for one variable is enough: two
    // substitutions give full compatibility.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (class_of[a] != class_of[b])
                continue;
            for (int c = 0; c < n; ++c) {
                if (class_of[D.meet(a, c)] != class_of[D.meet(b, c)])
                    return false;
                if (class_of[D.join(a, c)] != class_of[D.join(b, c)])
                    return false;
            }
        }
    return true;
}

namespace {

Congruence congruence_from_classes(const FiniteLattice& D, const std::vector<int>& raw) {
    // Renumber class ids by first occurrence.
    Congruence c;
    c.base = &D;
    c.class_of.assign(D.size(), -1);
    std::vector<int> seen; // raw id -> dense id, in first-occurrence order
    for (int e = 0; e < D.size(); ++e) {
        int dense = -1;
        for (size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == raw[e])
                dense = static_cast<int>(i);
        if (dense == -1) {
            dense = static_cast<int>(seen.size());
            seen.push_back(raw[e]);
        }
        c.class_of[e] = dense;
    }
    c.num_classes = static_cast<int>(seen.size());
    return c;
}

} // namespace

Congruence heitmann_congruence(const FiniteLattice& D) {
    require_distributive(D, "heitmann_congruence");
    PreorderRelation preceq = preceq_relation(D);
    const int n = D.size();
    std::vector<int> raw(n, -1);
    for (int a = 0; a < n; ++a) {
        if (raw[a] != -1)
            continue;
        raw[a] = a;
        for (int b = a + 1; b < n; ++b)
            if (preceq.holds(a, b) && preceq.holds(b, a))
                raw[b] = a;
    }
    Congruence c = congruence_from_classes(D, raw);
    if (!is_congruence(D, c.class_of))
        throw ConsistencyError("symmetrized rather-below is not a congruence");
    return c;
}

QuotientLattice quotient(const FiniteLattice& D, const Congruence& c) {
    if (c.base != &D || static_cast<int>(c.class_of.size()) != D.size())
        throw PreconditionError("quotient: congruence over a different lattice");
    if (!is_congruence(D, c.class_of))
        throw PreconditionError("quotient: partition is not a congruence");

    const int k = c.num_classes;
    std::vector<int> rep(k, -1);
    std::vector<std::vector<std::string>> names(k);
    for (int e = 0; e < D.size(); ++e) {
        if (rep[c.class_of[e]] == -1)
            rep[c.class_of[e]] = e;
        names[c.class_of[e]].push_back(D.label(e));
    }

    FinitePoset p;
    p.size = k;
    p.leq.assign(static_cast<size_t>(k) * k, 0);
    p.labels.resize(k);
    for (int i = 0; i < k; ++i) {
        std::sort(names[i].begin(), names[i].end());
        std::string label = "{";
        for (size_t s = 0; s < names[i].size(); ++s)
            label += (s ? "," : "") + names[i][s];
        p.labels[i] = label + "}";
        for (int j = 0; j < k; ++j)
            if (c.class_of[D.meet(rep[i], rep[j])] == i)
                p.leq[static_cast<size_t>(i) * k + j] = 1;
    }

    QuotientLattice q;
    q.lattice = lattice_from_poset(std::move(p));
    q.projection = c.class_of;
    // Projection must be a surjective homomorphism onto the induced tables.
    for (int a = 0; a < D.size(); ++a)
        for (int b = 0; b < D.size(); ++b) {
            if (q.lattice.meet(c.class_of[a], c.class_of[b]) != c.class_of[D.meet(a, b)])
                throw ConsistencyError("quotient projection does not preserve meets");
            if (q.lattice.join(c.class_of[a], c.class_of[b]) != c.class_of[D.join(a, b)])
                throw ConsistencyError("quotient projection does not preserve joins");
        }
    return q;
}

std::vector<Congruence> enumerate_congruences(const FiniteLattice& D, int cap) {
    const int n = D.size();
    if (n > cap)
        throw CapError("congruence enumeration: lattice size " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
    std::vector<Congruence> out;
    std::vector<int> rgs(n, 0);
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(prefix) + 1.
    auto emit = [&]() {
        if (is_congruence(D, rgs))
            out.push_back(congruence_from_classes(D, rgs));
    };
    if (n == 1) {
        emit();
        return out;
    }
    std::vector<int> maxes(n, 0);
    int i = 1;
    rgs[1] = 0;
    while (i >= 1) {
        if (i == n - 1) {
            emit();
        }
        if (i < n - 1) {
            ++i;
            rgs[i] = 0;
            maxes[i] = std::max(maxes[i - 1], rgs[i - 1]);
            continue;
        }
        while (i >= 1 && rgs[i] == maxes[i] + 1) {
            --i;
        }
        if (i >= 1)
            ++rgs[i];
    }
    return out;
}

bool check_top_lemma(const FiniteLattice& D, int cap) {
    Congruence heitmann = heitmann_congruence(D);
    auto singleton_top = [&](const Congruence& c) {
        for (int e = 0; e < D.size(); ++e)
            if (e != D.top && c.same(e, D.top))
                return false;
        return true;
    };
    if (!singleton_top(heitmann))
        return false;
    for (const Congruence& c : enumerate_congruences(D, cap)) {
        if (!singleton_top(c))
            continue;
        // c must refine the Heitmann congruence.
        for (int a = 0; a < D.size(); ++a)
            for (int b = 0; b < D.size(); ++b)
                if (c.same(a, b) && !heitmann.same(a, b))
                    return false;
    }
    return true;
}

JacobsonConditions jacobson_conditions(const FiniteLattice& D) {
    require_distributive(D, "jacobson_conditions");
    PrimeSpectrum spec = prime_ideals(D);
    JacobsonConditions out;

    out.primes_are_intersections = true;
    for (const Ideal& P : spec.primes) {
        std::vector<uint8_t> members = P.members();
        if (intersect_maximals_containing(D, spec, members) != members) {
            out.primes_are_intersections = false;
            break;
        }
    }

    out.ideals_are_intersections = true;
    for (int g = 0; g < D.size() && out.ideals_are_intersections; ++g) {
        std::vector<uint8_t> members = downset_members(D, g);
        if (intersect_maximals_containing(D, spec, members) != members)
            out.ideals_are_intersections = false;
    }

    // The ideal frame of a finite lattice is the lattice itself.
    out.ideal_frame_subfit = is_subfit(D);

    out.spectrum_jacobson_space = is_jacobson_space(spec_space(D));
    return out;
}

bool is_jacobson(const FiniteLattice& D) {
    JacobsonConditions c = jacobson_conditions(D);
    if (!c.agree())
        throw ConsistencyError("Jacobson conditions disagree on '" +
                               serialize_document(canonical_document(D)) + "'");
    return c.primes_are_intersections;
}

std::vector<Ideal> stable_primes(const FiniteLattice& D, const Congruence& c) {
    require_distributive(D, "stable_primes");
    PrimeSpectrum spec = prime_ideals(D);

    std::vector<Ideal> by_definition;
    for (const Ideal& P : spec.primes) {
        bool stable = true;
        for (int a = 0; a < D.size() && stable; ++a) {
            if (!P.contains(a))
                continue;
            for (int b = 0; b < D.size(); ++b)
                if (c.same(a, b) && !P.contains(b)) {
                    stable = false;
                    break;
                }
        }
        if (stable)
            by_definition.push_back(P);
    }

    // Cross-check: stable primes are exactly the projection preimages of
    // the quotient's primes.
    QuotientLattice q = quotient(D, c);
    std::set<int> preimage_generators;
    for (const Ideal& PQ : prime_ideals(q.lattice).primes) {
        std::vector<uint8_t> members(D.size(), 0);
        for (int e = 0; e < D.size(); ++e)
            if (PQ.contains(q.projection[e]))
                members[e] = 1;
        preimage_generators.insert(ideal_from_members(D, members).generator);
    }
    std::set<int> definitional_generators;
    for (const Ideal& P : by_definition)
        definitional_generators.insert(P.generator);
    if (definitional_generators != preimage_generators)
        throw ConsistencyError("stable primes disagree with quotient-spectrum preimages");

    return by_definition;
}

bool check_chi_characterisation(const FiniteLattice& D, int cap) {
    Congruence heitmann = heitmann_congruence(D);
    std::set<int> s_chi;
    for (const Ideal& P : stable_primes(D, heitmann))
        s_chi.insert(P.generator);

    PrimeSpectrum spec = prime_ideals(D);
    std::set<int> maximals;
    for (int i = 0; i < spec.count(); ++i)
        if (spec.maximal_flags[i])
            maximals.insert(spec.primes[i].generator);

    if (!std::includes(s_chi.begin(), s_chi.end(), maximals.begin(), maximals.end()))
        return false;

    for (const Congruence& c : enumerate_congruences(D, cap)) {
        std::set<int> stable;
        for (const Ideal& P : stable_primes(D, c))
            stable.insert(P.generator);
        if (!std::includes(stable.begin(), stable.end(), maximals.begin(), maximals.end()))
            continue;
        if (!std::includes(stable.begin(), stable.end(), s_chi.begin(), s_chi.end()))
            return false;
    }
    return true;
}

bool check_chi_equals_xi(const FiniteLattice& D) {
    require_distributive(D, "check_chi_equals_xi");
    bool chi_is_xi = true;
    for (int g = 0; g < D.size(); ++g) {
        Ideal I{&D, g};
        if (!(chi_ideal(D, I) == xi_ideal(D, I))) {
            chi_is_xi = false;
            break;
        }
    }
    bool quotient_jacobson = is_jacobson(quotient(D, heitmann_congruence(D)).lattice);
    if (chi_is_xi != quotient_jacobson)
        throw ConsistencyError("chi = xi biconditional failed: pointwise equality says " +
                               std::to_string(chi_is_xi) + ", Jacobson quotient says " +
                               std::to_string(quotient_jacobson));
    return chi_is_xi;
}

} // namespace framekit
