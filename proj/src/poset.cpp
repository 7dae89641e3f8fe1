#include "framekit/poset.hpp"
#include "framekit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace framekit {

void validate_poset(const FinitePoset& p) {
    if (p.size < 1)
        throw SemanticError("poset must have at least one element");
    const size_t n = static_cast<size_t>(p.size);
    if (p.leq.size() != n * n)
        throw SemanticError("relation table has wrong shape");
    if (p.labels.size() != n)
        throw SemanticError("label count does not match element count");
    for (int a = 0; a < p.size; ++a) {
        if (!p.less_eq(a, a))
            throw SemanticError("relation is not reflexive at '" + p.labels[a] + "'");
        for (int b = 0; b < p.size; ++b) {
            if (a != b && p.less_eq(a, b) && p.less_eq(b, a))
                throw SemanticError("relation is not antisymmetric between '" + p.labels[a] +
                                    "' and '" + p.labels[b] + "'");
            if (!p.less_eq(a, b))
                continue;
            for (int c = 0; c < p.size; ++c)
                if (p.less_eq(b, c) && !p.less_eq(a, c))
                    throw SemanticError("relation is not transitive");
        }
    }
}

void reflexive_transitive_closure(std::vector<uint8_t>& rel, int n) {
    for (int a = 0; a < n; ++a)
        rel[static_cast<size_t>(a) * n + a] = 1;
    // Warshall
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a) {
            if (!rel[static_cast<size_t>(a) * n + k])
                continue;
            for (int b = 0; b < n; ++b)
                if (rel[static_cast<size_t>(k) * n + b])
                    rel[static_cast<size_t>(a) * n + b] = 1;
        }
}

namespace {

std::vector<uint8_t> permuted_table(const std::vector<uint8_t>& leq, int n,
                                    const std::vector<int>& perm) {
    std::vector<uint8_t> out(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[static_cast<size_t>(perm[a]) * n + perm[b]] =
                leq[static_cast<size_t>(a) * n + b];
    return out;
}

std::vector<uint8_t> canonical_table(const std::vector<uint8_t>& leq, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint8_t> best = leq;
    do {
        std::vector<uint8_t> cand = permuted_table(leq, n, perm);
        if (cand < best)
            best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::vector<FinitePoset> enumerate_posets(int n) {
    if (n < 1)
        throw PreconditionError("poset enumeration needs n >= 1");
    if (n > 7)
        throw CapError("poset enumeration is capped at 7 elements");

    std::vector<std::pair<int, int>> slots; // (i, j) with i < j
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);

    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = "p" + std::to_string(i);

    std::set<std::vector<uint8_t>> seen;
    std::vector<FinitePoset> out;
    const uint64_t limit = uint64_t{1} << slots.size();
    for (uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<uint8_t> rel(static_cast<size_t>(n) * n, 0);
        for (size_t s = 0; s < slots.size(); ++s)
            if (mask & (uint64_t{1} << s))
                rel[static_cast<size_t>(slots[s].first) * n + slots[s].second] = 1;
        reflexive_transitive_closure(rel, n);
        if (!seen.insert(canonical_table(rel, n)).second)
            continue;
        FinitePoset p;
        p.size = n;
        p.leq = std::move(rel);
        p.labels = labels;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace framekit
