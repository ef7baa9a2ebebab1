#include "bmat/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bmat {

namespace {

// Basis with each row tagged by the positions of the independent set it
// was built from; used to read off fundamental circuits.
struct TaggedSpan {
    std::vector<Word> vec, tag;
    // Returns the residue; `t` receives the combination of tags used.
    Word reduce(Word v, Word& t) const {
        t = 0;
        for (std::size_t i = 0; i < vec.size(); ++i)
            if ((v >> lowest_bit(vec[i])) & 1u) { v ^= vec[i]; t ^= tag[i]; }
        return v;
    }
    void insert(Word v, Word t) {
        Word tt;
        v = reduce(v, tt);
        if (!v) throw std::logic_error("TaggedSpan: dependent insert");
        vec.push_back(v);
        tag.push_back(t ^ tt);
    }
};

Separation make_separation(const BinaryMatroid& m, const ElementSet& side1, int order) {
    Separation s;
    ElementSet side2 = m.complement(side1);
    s.side1 = m.labels_of(side1);
    s.side2 = m.labels_of(side2);
    s.order = order;
    s.exact = m.lambda(side1) == order - 1;
    return s;
}

}  // namespace

Linkage min_separation_between(const BinaryMatroid& m, const ElementSet& a, const ElementSet& b) {
    const int n = m.size();
    std::vector<char> role(static_cast<std::size_t>(n), 0);
    for (int e : a) role[static_cast<std::size_t>(e)] = 1;
    for (int e : b) {
        if (role[static_cast<std::size_t>(e)]) throw std::invalid_argument("min_separation_between: anchors overlap");
        role[static_cast<std::size_t>(e)] = 2;
    }
    ElementSet s;
    for (int e = 0; e < n; ++e)
        if (!role[static_cast<std::size_t>(e)]) s.push_back(e);
    Subspace sa(m.rank()), sb(m.rank());
    for (int e : a) sa.insert(m.column(e));
    for (int e : b) sb.insert(m.column(e));
    const std::size_t ns = s.size();
    std::vector<Word> c1(ns), c2(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        c1[i] = sa.quotient_coords(m.column(s[i]));
        c2[i] = sb.quotient_coords(m.column(s[i]));
    }

    // Matroid intersection of (M/A)|S and (M/B)|S by shortest augmenting paths.
    std::vector<char> in(ns, 0);
    std::vector<int> reach_sink;
    while (true) {
        std::vector<std::size_t> cur;
        for (std::size_t i = 0; i < ns; ++i)
            if (in[i]) cur.push_back(i);
        if (cur.size() > 64) throw std::logic_error("min_separation_between: independent set too large");
        TaggedSpan t1, t2;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            t1.insert(c1[cur[k]], bit(static_cast<int>(k)));
            t2.insert(c2[cur[k]], bit(static_cast<int>(k)));
        }
        // adjacency: out[v] lists successors
        std::vector<std::vector<std::size_t>> out(ns);
        std::vector<char> source(ns, 0), sink(ns, 0);
        for (std::size_t x = 0; x < ns; ++x) {
            if (in[x]) continue;
            Word tg;
            if (t1.reduce(c1[x], tg)) {
                source[x] = 1;
            } else {
                while (tg) {  // y -> x when I - y + x independent in M1
                    std::size_t y = cur[static_cast<std::size_t>(lowest_bit(tg))];
                    tg &= tg - 1;
                    out[y].push_back(x);
                }
            }
            if (t2.reduce(c2[x], tg)) {
                sink[x] = 1;
            } else {
                while (tg) {  // x -> y when I - y + x independent in M2
                    std::size_t y = cur[static_cast<std::size_t>(lowest_bit(tg))];
                    tg &= tg - 1;
                    out[x].push_back(y);
                }
            }
        }
        std::vector<long> prev(ns, -2);
        std::deque<std::size_t> q;
        for (std::size_t x = 0; x < ns; ++x)
            if (source[x]) { prev[x] = -1; q.push_back(x); }
        long end = -1;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            if (sink[v]) { end = static_cast<long>(v); break; }
            for (std::size_t w : out[v])
                if (prev[w] == -2) { prev[w] = static_cast<long>(v); q.push_back(w); }
        }
        if (end >= 0) {
            for (long v = end; v >= 0; v = prev[static_cast<std::size_t>(v)]) in[static_cast<std::size_t>(v)] ^= 1;
            continue;
        }
        // U = vertices reachable from a source; r2(U) = |I & U| and
        // r1(S - U) = |I - U|, so the minimizing side is A + (S - U).
        std::vector<char> u(ns, 0);
        for (std::size_t x = 0; x < ns; ++x) u[x] = prev[x] != -2;
        Linkage res;
        res.kappa = sa.dim() + sb.dim() - m.rank() + static_cast<int>(cur.size());
        res.side = a;
        for (std::size_t i = 0; i < ns; ++i)
            if (!u[i]) res.side.push_back(s[i]);
        std::sort(res.side.begin(), res.side.end());
        if (m.lambda(res.side) != res.kappa) throw std::logic_error("min_separation_between: minimizer mismatch");
        return res;
    }
}

namespace {

struct SepSearch {
    const BinaryMatroid& m;
    int k, min_side, n;
    ElementSet x, y;
    std::optional<Separation> found;

    void rec(int i, const Subspace& sx, const Subspace& sy) {
        if (found) return;
        int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
        if (nx + (n - i) < min_side || ny + (n - i) < min_side) return;
        if (sx.dim() + sy.dim() - join(sx, sy).dim() >= k) return;
        if (nx >= min_side && ny >= min_side) {
            Linkage l = min_separation_between(m, x, y);
            if (l.kappa < k) found = make_separation(m, l.side, l.kappa + 1);
            return;
        }
        if (i == n) return;
        Subspace t = sx;
        t.insert(m.column(i));
        x.push_back(i);
        rec(i + 1, t, sy);
        x.pop_back();
        if (found) return;
        t = sy;
        t.insert(m.column(i));
        y.push_back(i);
        rec(i + 1, sx, t);
        y.pop_back();
    }
};

}  // namespace

std::optional<Separation> find_separation_general(const BinaryMatroid& m, int k, int min_side) {
    if (k < 1 || min_side < 1) throw std::invalid_argument("find_separation_general: bad parameters");
    const int n = m.size();
    if (n < 2 * min_side) return std::nullopt;
    SepSearch st{m, k, min_side, n, {0}, {}, std::nullopt};
    Subspace sx(m.rank());
    sx.insert(m.column(0));
    st.rec(1, sx, Subspace(m.rank()));
    // The separation is reported with its exact order, which may be below k.
    if (st.found) return st.found;
    return std::nullopt;
}

std::optional<Separation> find_separation(const BinaryMatroid& m, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("find_separation: k must be 1 or 2");
    return find_separation_general(m, k, k);
}

std::optional<Separation> find_3sep_big(const BinaryMatroid& m) {
    if (!is_3connected(m)) throw std::invalid_argument("find_3sep_big: matroid is not 3-connected");
    return find_separation_general(m, 3, 4);
}

std::vector<ElementSet> components(const BinaryMatroid& m) {
    // Elements are joined when they share a fundamental circuit.
    const int n = m.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto findp = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    if (n && m.rank() > 0) {
        ElementSet basis = m.greedy_basis();
        std::vector<Word> coords = m.coordinates_in_basis(basis);
        std::vector<char> in_basis(static_cast<std::size_t>(n), 0);
        for (int e : basis) in_basis[static_cast<std::size_t>(e)] = 1;
        for (int e = 0; e < n; ++e) {
            if (in_basis[static_cast<std::size_t>(e)]) continue;
            Word c = coords[static_cast<std::size_t>(e)];
            while (c) {
                int j = basis[static_cast<std::size_t>(lowest_bit(c))];
                c &= c - 1;
                parent[static_cast<std::size_t>(findp(j))] = findp(e);
            }
        }
    }
    std::map<int, ElementSet> groups;
    for (int e = 0; e < n; ++e) groups[findp(e)].push_back(e);
    std::vector<ElementSet> out;
    for (auto& [r, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const BinaryMatroid& m) { return components(m).size() <= 1; }

bool is_3connected(const BinaryMatroid& m) {
    if (!is_connected(m)) return false;
    return !find_separation(m, 2).has_value();
}

bool is_internally_4connected(const BinaryMatroid& m) {
    if (!is_3connected(m)) return false;
    return !find_separation_general(m, 3, 4).has_value();
}

std::optional<Separation> brute_force_separation(const BinaryMatroid& m, int k, int min_side) {
    const int n = m.size();
    if (n > 24) throw std::invalid_argument("brute_force_separation: ground set too large");
    if (n < 2 * min_side) return std::nullopt;
    std::optional<Separation> best;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        ElementSet x{0};
        for (int i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1u) x.push_back(i);
        int sx = static_cast<int>(x.size());
        if (sx < min_side || n - sx < min_side) continue;
        int lam = m.lambda(x);
        if (lam < k) return make_separation(m, x, lam + 1);
    }
    return best;
}

}  // namespace bmat
