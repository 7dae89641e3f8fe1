#include "framekit/lattice.hpp"
#include "framekit/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace framekit {

int FiniteLattice::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (poset.labels[i] == name)
            return i;
    return -1;
}

namespace {

// Greatest element of {x : x <= a and x <= b} under leq, or -1 if the set
// has no maximum. One pass keeps a running candidate (the maximum, when it
// exists, dominates everything and therefore replaces the candidate when
// scanned), then a second pass confirms dominance.
int bound_of_pair(const FinitePoset& p, int a, int b, bool lower) {
    int cand = -1;
    for (int x = 0; x < p.size; ++x) {
        bool in = lower ? (p.less_eq(x, a) && p.less_eq(x, b))
                        : (p.less_eq(a, x) && p.less_eq(b, x));
        if (!in)
            continue;
        if (cand == -1 || (lower ? p.less_eq(cand, x) : p.less_eq(x, cand)))
            cand = x;
    }
    if (cand == -1)
        return -1;
    for (int x = 0; x < p.size; ++x) {
        bool in = lower ? (p.less_eq(x, a) && p.less_eq(x, b))
                        : (p.less_eq(a, x) && p.less_eq(b, x));
        if (in && !(lower ? p.less_eq(x, cand) : p.less_eq(cand, x)))
            return -1;
    }
    return cand;
}

} // namespace

FiniteLattice lattice_from_poset(FinitePoset poset) {
    validate_poset(poset);
    const int n = poset.size;

    int bot = -1, top = -1;
    for (int x = 0; x < n; ++x) {
        bool is_bot = true, is_top = true;
        for (int y = 0; y < n; ++y) {
            is_bot = is_bot && poset.less_eq(x, y);
            is_top = is_top && poset.less_eq(y, x);
        }
        if (is_bot) bot = x;
        if (is_top) top = x;
    }
    if (bot == -1 || top == -1)
        throw LatticeError("no global bounds");

    FiniteLattice L;
    L.meet_table.resize(static_cast<size_t>(n) * n);
    L.join_table.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            int m = bound_of_pair(poset, a, b, true);
            int j = bound_of_pair(poset, a, b, false);
            if (m == -1)
                throw LatticeError("not a lattice: '" + poset.label(a) + "' and '" +
                                   poset.label(b) + "' have no meet");
            if (j == -1)
                throw LatticeError("not a lattice: '" + poset.label(a) + "' and '" +
                                   poset.label(b) + "' have no join");
            L.meet_table[static_cast<size_t>(a) * n + b] = m;
            L.meet_table[static_cast<size_t>(b) * n + a] = m;
            L.join_table[static_cast<size_t>(a) * n + b] = j;
            L.join_table[static_cast<size_t>(b) * n + a] = j;
        }
    L.poset = std::move(poset);
    L.bot = bot;
    L.top = top;
    return L;
}

FiniteLattice build_lattice(const LatticeDocument& doc, int size_cap) {
    validate_document(doc);
    const int n = static_cast<int>(doc.elements.size());
    if (n > size_cap)
        throw CapError("lattice size " + std::to_string(n) + " exceeds cap " +
                       std::to_string(size_cap));

    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        index.emplace(doc.elements[i], i);

    FinitePoset p;
    p.size = n;
    p.labels = doc.elements;
    p.leq.assign(static_cast<size_t>(n) * n, 0);
    for (const auto& [lo, hi] : doc.covers)
        p.leq[static_cast<size_t>(index[lo]) * n + index[hi]] = 1;
    reflexive_transitive_closure(p.leq, n);
    return lattice_from_poset(std::move(p));
}

bool check_distributive(const FiniteLattice& L) {
    const int n = L.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
                    return false;
    return true;
}

namespace {

std::string brace_label(const FinitePoset& P, uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < P.size; ++i)
        if (mask & (uint32_t{1} << i)) {
            if (!first) s += ",";
            s += P.label(i);
            first = false;
        }
    return s + "}";
}

} // namespace

FiniteLattice downset_lattice(const FinitePoset& P, int size_cap) {
    validate_poset(P);
    if (P.size > 20)
        throw CapError("downset enumeration is capped at 20 poset elements");

    std::vector<uint32_t> down(P.size, 0); // principal downsets as masks
    for (int a = 0; a < P.size; ++a)
        for (int b = 0; b < P.size; ++b)
            if (P.less_eq(b, a))
                down[a] |= uint32_t{1} << b;

    std::vector<uint32_t> sets;
    const uint32_t limit = uint32_t{1} << P.size;
    for (uint32_t mask = 0; mask < limit; ++mask) {
        bool closed = true;
        for (int a = 0; a < P.size && closed; ++a)
            if ((mask & (uint32_t{1} << a)) && (down[a] & ~mask))
                closed = false;
        if (closed)
            sets.push_back(mask);
    }
    if (static_cast<int>(sets.size()) > size_cap)
        throw CapError("downset lattice has " + std::to_string(sets.size()) +
                       " elements, cap is " + std::to_string(size_cap));
    std::sort(sets.begin(), sets.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::unordered_map<uint32_t, int> pos;
    for (size_t i = 0; i < sets.size(); ++i)
        pos.emplace(sets[i], static_cast<int>(i));

    const int n = static_cast<int>(sets.size());
    FiniteLattice L;
    L.poset.size = n;
    L.poset.leq.assign(static_cast<size_t>(n) * n, 0);
    L.poset.labels.resize(n);
    L.meet_table.resize(static_cast<size_t>(n) * n);
    L.join_table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        L.poset.labels[i] = brace_label(P, sets[i]);
        for (int j = 0; j < n; ++j) {
            if ((sets[i] & ~sets[j]) == 0)
                L.poset.leq[static_cast<size_t>(i) * n + j] = 1;
            L.meet_table[static_cast<size_t>(i) * n + j] = pos.at(sets[i] & sets[j]);
            L.join_table[static_cast<size_t>(i) * n + j] = pos.at(sets[i] | sets[j]);
        }
    }
    L.bot = pos.at(0);
    L.top = pos.at(limit - 1);
    return L;
}

std::vector<std::pair<int, int>> cover_pairs(const FiniteLattice& L) {
    const int n = L.size();
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !L.less_eq(a, b))
                continue;
            bool covers = true;
            for (int c = 0; c < n && covers; ++c)
                if (c != a && c != b && L.less_eq(a, c) && L.less_eq(c, b))
                    covers = false;
            if (covers)
                out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Irreducibles irreducibles(const FiniteLattice& L) {
    const int n = L.size();
    std::vector<int> lower_covers(n, 0), upper_covers(n, 0);
    Irreducibles out;
    for (auto [a, b] : cover_pairs(L)) {
        ++upper_covers[a];
        ++lower_covers[b];
        if (a == L.bot)
            out.atoms.push_back(b);
        if (b == L.top)
            out.coatoms.push_back(a);
    }
    for (int e = 0; e < n; ++e) {
        if (lower_covers[e] == 1)
            out.join_irreducible.push_back(e);
        if (upper_covers[e] == 1)
            out.meet_irreducible.push_back(e);
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    std::sort(out.coatoms.begin(), out.coatoms.end());
    return out;
}

LatticeDocument canonical_document(const FiniteLattice& L) {
    LatticeDocument doc;
    doc.elements = L.poset.labels;
    for (auto [a, b] : cover_pairs(L))
        doc.covers.emplace_back(L.label(a), L.label(b));
    return doc;
}

FiniteLattice trivial_lattice() {
    FiniteLattice L;
    L.poset.size = 1;
    L.poset.leq = {1};
    L.poset.labels = {"e"};
    L.meet_table = {0};
    L.join_table = {0};
    L.bot = L.top = 0;
    return L;
}

std::vector<FiniteLattice> downset_corpus(int max_poset_size) {
    std::vector<FiniteLattice> corpus;
    corpus.push_back(trivial_lattice());
    for (int n = 1; n <= max_poset_size; ++n)
        for (const auto& P : enumerate_posets(n))
            corpus.push_back(downset_lattice(P));
    return corpus;
}

} // namespace framekit
