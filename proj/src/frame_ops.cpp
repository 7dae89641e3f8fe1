#include "framekit/frame_ops.hpp"
#include "framekit/errors.hpp"

#include <algorithm>

namespace framekit {

namespace {

void require_distributive(const FiniteLattice& L, const char* who) {
    if (!check_distributive(L))
        throw PreconditionError(std::string(who) + " requires a distributive lattice");
}

void require_same_base(const Operator& op, const FiniteLattice* base, const char* who) {
    if (op.base != base)
        throw PreconditionError(std::string(who) + ": operators over different lattices");
    if (static_cast<int>(op.table.size()) != base->size())
        throw PreconditionError(std::string(who) + ": operator table has wrong size");
}

// The quantifier core of rather_below, distributivity already checked.
bool rather_below_unchecked(const FiniteLattice& L, int a, int b) {
    for (int c = 0; c < L.size(); ++c)
        if (L.join(a, c) == L.top && L.join(b, c) != L.top)
            return false;
    return true;
}

} // namespace

Operator identity_operator(const FiniteLattice& L) {
    Operator op{&L, std::vector<int>(L.size())};
    for (int e = 0; e < L.size(); ++e)
        op.table[e] = e;
    return op;
}

Operator constant_top_operator(const FiniteLattice& L) {
    return Operator{&L, std::vector<int>(L.size(), L.top)};
}

bool rather_below(const FiniteLattice& L, int a, int b) {
    require_distributive(L, "rather_below");
    return rather_below_unchecked(L, a, b);
}

PreorderRelation preceq_relation(const FiniteLattice& L) {
    require_distributive(L, "preceq_relation");
    const int n = L.size();
    PreorderRelation r{&L, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rather_below_unchecked(L, a, b))
                r.rel[static_cast<size_t>(a) * n + b] = 1;
    return r;
}

int xi(const FiniteLattice& L, int a) {
    require_distributive(L, "xi");
    int acc = L.bot;
    for (int b = 0; b < L.size(); ++b)
        if (rather_below_unchecked(L, b, a))
            acc = L.join(acc, b);
    return acc;
}

Operator xi_operator(const FiniteLattice& L) {
    PreorderRelation r = preceq_relation(L);
    Operator op{&L, std::vector<int>(L.size())};
    for (int a = 0; a < L.size(); ++a) {
        int acc = L.bot;
        for (int b = 0; b < L.size(); ++b)
            if (r.holds(b, a))
                acc = L.join(acc, b);
        op.table[a] = acc;
    }
    return op;
}

bool is_inflator(const Operator& op) {
    const FiniteLattice& L = *op.base;
    for (int a = 0; a < L.size(); ++a) {
        if (!L.less_eq(a, op.apply(a)))
            return false;
        for (int b = 0; b < L.size(); ++b)
            if (L.less_eq(a, b) && !L.less_eq(op.apply(a), op.apply(b)))
                return false;
    }
    return true;
}

bool is_prenucleus(const Operator& op) {
    if (!is_inflator(op))
        return false;
    const FiniteLattice& L = *op.base;
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
            if (!L.less_eq(L.meet(op.apply(a), op.apply(b)), op.apply(L.meet(a, b))))
                return false;
    return true;
}

bool is_nucleus(const Operator& op) {
    if (!is_prenucleus(op))
        return false;
    for (int a = 0; a < op.base->size(); ++a)
        if (op.apply(op.apply(a)) != op.apply(a))
            return false;
    return true;
}

bool admits_only_top(const Operator& op) {
    const FiniteLattice& L = *op.base;
    for (int a = 0; a < L.size(); ++a)
        if (op.apply(a) == L.top && a != L.top)
            return false;
    return true;
}

Operator pointwise_join(const std::vector<Operator>& ops) {
    if (ops.empty())
        throw PreconditionError("pointwise_join of an empty family");
    const FiniteLattice& L = *ops.front().base;
    for (const auto& op : ops)
        require_same_base(op, &L, "pointwise_join");
    Operator out{&L, std::vector<int>(L.size(), L.bot)};
    for (int a = 0; a < L.size(); ++a)
        for (const auto& op : ops)
            out.table[a] = L.join(out.table[a], op.apply(a));
    return out;
}

ClosureResult iterate_to_closure(const Operator& op) {
    if (!is_inflator(op))
        throw PreconditionError("iterate_to_closure requires an inflator");
    const FiniteLattice& L = *op.base;
    const int n = L.size();

    std::vector<int> current(n); // op^k, starting at op^0 = identity
    for (int e = 0; e < n; ++e)
        current[e] = e;
    int steps = 0;
    const int hard_limit = n * n + 1;
    while (true) {
        std::vector<int> next(n);
        for (int e = 0; e < n; ++e)
            next[e] = op.apply(current[e]); // op^(k+1) = op o op^k
        if (next == current)
            return ClosureResult{Operator{&L, std::move(current)}, steps};
        current = std::move(next);
        if (++steps > hard_limit)
            throw ConsistencyError("inflator iteration failed to converge");
    }
}

bool is_subfit(const FiniteLattice& L) {
    PreorderRelation r = preceq_relation(L);
    const int n = L.size();
    bool preceq_is_leq = true;
    for (int a = 0; a < n && preceq_is_leq; ++a)
        for (int b = 0; b < n; ++b)
            if (r.holds(a, b) != L.less_eq(a, b)) {
                preceq_is_leq = false;
                break;
            }
    bool xi_is_identity = xi_operator(L).table == identity_operator(L).table;
    if (preceq_is_leq != xi_is_identity)
        throw ConsistencyError("subfitness tests disagree: preceq==leq says " +
                               std::to_string(preceq_is_leq) + ", xi==id says " +
                               std::to_string(xi_is_identity));
    return preceq_is_leq;
}

Operator witness_nucleus(const FiniteLattice& L, int a, int b) {
    if (!rather_below(L, b, a))
        throw PreconditionError("witness_nucleus: '" + L.label(b) + "' is not rather below '" +
                                L.label(a) + "'");
    const int n = L.size();
    Operator g{&L, std::vector<int>(n)};
    for (int c = 0; c < n; ++c) {
        int acc = L.bot;
        const int bc = L.join(b, c);
        for (int x = 0; x < n; ++x)
            if (L.less_eq(x, bc) && L.less_eq(L.meet(x, a), c))
                acc = L.join(acc, x);
        g.table[c] = acc;
    }
    if (!is_nucleus(g))
        throw ConsistencyError("witness construction did not produce a nucleus");
    if (!admits_only_top(g))
        throw ConsistencyError("witness nucleus admits an element other than top");
    if (!L.less_eq(b, g.apply(a)))
        throw ConsistencyError("witness nucleus does not dominate b at a");
    return g;
}

namespace {

struct FnSearch {
    const FiniteLattice& L;
    std::vector<std::vector<int>> upsets; // candidate images per element
    std::vector<int> table;
    std::vector<Operator>* out;

    void assign(int e) {
        if (e == L.size()) {
            Operator op{&L, table};
            if (is_nucleus(op) && admits_only_top(op))
                out->push_back(std::move(op));
            return;
        }
        for (int v : upsets[e]) {
            if (v == L.top && e != L.top)
                continue; // would admit e
            bool monotone = true;
            for (int prev = 0; prev < e && monotone; ++prev) {
                if (L.less_eq(prev, e) && !L.less_eq(table[prev], v))
                    monotone = false;
                if (L.less_eq(e, prev) && !L.less_eq(v, table[prev]))
                    monotone = false;
            }
            if (!monotone)
                continue;
            table[e] = v;
            assign(e + 1);
        }
    }
};

} // namespace

std::vector<Operator> enumerate_Fn(const FiniteLattice& L, int cap) {
    if (L.size() > cap)
        throw CapError("enumerate_Fn: lattice size " + std::to_string(L.size()) +
                       " exceeds enumeration cap " + std::to_string(cap));
    std::vector<std::vector<int>> upsets(L.size());
    for (int e = 0; e < L.size(); ++e)
        for (int v = 0; v < L.size(); ++v)
            if (L.less_eq(e, v))
                upsets[e].push_back(v);

    std::vector<Operator> out;
    FnSearch search{L, std::move(upsets), std::vector<int>(L.size()), &out};
    search.assign(0);
    std::sort(out.begin(), out.end(),
              [](const Operator& x, const Operator& y) { return x.table < y.table; });
    return out;
}

bool theorem2_check(const FiniteLattice& L, int cap) {
    require_distributive(L, "theorem2_check");
    std::vector<Operator> fn = enumerate_Fn(L, cap);
    return pointwise_join(fn).table == xi_operator(L).table;
}

FrameProduct frame_product(const FiniteLattice& A, const FiniteLattice& B, int size_cap) {
    require_distributive(A, "frame_product");
    require_distributive(B, "frame_product");
    const long long total = static_cast<long long>(A.size()) * B.size();
    if (total > size_cap)
        throw CapError("product lattice has " + std::to_string(total) + " elements, cap is " +
                       std::to_string(size_cap));

    FrameProduct prod;
    prod.left_size = A.size();
    prod.right_size = B.size();
    const int n = static_cast<int>(total);
    FiniteLattice& L = prod.lattice;
    L.poset.size = n;
    L.poset.leq.assign(static_cast<size_t>(n) * n, 0);
    L.poset.labels.resize(n);
    L.meet_table.resize(static_cast<size_t>(n) * n);
    L.join_table.resize(static_cast<size_t>(n) * n);
    for (int e = 0; e < n; ++e)
        L.poset.labels[e] =
            "(" + A.label(prod.left(e)) + "," + B.label(prod.right(e)) + ")";
    for (int e = 0; e < n; ++e) {
        const int ea = prod.left(e), eb = prod.right(e);
        for (int f = 0; f < n; ++f) {
            const int fa = prod.left(f), fb = prod.right(f);
            if (A.less_eq(ea, fa) && B.less_eq(eb, fb))
                L.poset.leq[static_cast<size_t>(e) * n + f] = 1;
            L.meet_table[static_cast<size_t>(e) * n + f] =
                prod.pair_index(A.meet(ea, fa), B.meet(eb, fb));
            L.join_table[static_cast<size_t>(e) * n + f] =
                prod.pair_index(A.join(ea, fa), B.join(eb, fb));
        }
    }
    L.bot = prod.pair_index(A.bot, B.bot);
    L.top = prod.pair_index(A.top, B.top);
    return prod;
}

} // namespace framekit
