#include "bmat/decomposition.hpp"

#include <set>
#include <stdexcept>

#include "bmat/composition.hpp"
#include "bmat/connectivity.hpp"

namespace bmat {

namespace {

struct Side {
    std::vector<Label> labels;
    std::vector<Word> cols;
    void add(const Label& l, Word c) { labels.push_back(l); cols.push_back(c); }
    int find(const Label& l) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return static_cast<int>(i);
        return -1;
    }
};

class LabelPool {
public:
    explicit LabelPool(const BinaryMatroid& m) {
        for (const auto& l : m.labels()) used_.insert(l);
    }
    void reserve(const Label& l) { used_.insert(l); }
    Label fresh(const std::string& base) {
        Label l = base;
        for (int k = 1; used_.count(l); ++k) l = base + "_" + std::to_string(k);
        used_.insert(l);
        return l;
    }

private:
    std::set<Label> used_;
};

std::vector<Word> nonzero_elements(const Subspace& s) {
    std::vector<Word> out;
    for (Word v : s.elements())
        if (v) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Subspace span_of(const BinaryMatroid& m, const std::vector<Label>& ls) {
    Subspace s(m.rank());
    for (const auto& l : ls) s.insert(m.column(m.index_of(l)));
    return s;
}

}  // namespace

SplitResult split_along(const BinaryMatroid& m, const Separation& s, const std::string& marker) {
    if (!verify_separation(m, s) || !s.exact) throw std::invalid_argument("split_along: invalid or inexact separation");
    if (s.order < 1 || s.order > 3) throw std::invalid_argument("split_along: order must be 1, 2 or 3");
    Subspace a = span_of(m, s.side1), b = span_of(m, s.side2);
    Subspace z = span_intersection(a, b);
    if (z.dim() != s.order - 1) throw std::logic_error("split_along: unexpected intersection dimension");
    LabelPool pool(m);
    SplitResult out;
    std::vector<Word> zc = nonzero_elements(z);
    for (std::size_t i = 0; i < zc.size(); ++i)
        out.shared.push_back(pool.fresh(zc.size() == 1 ? marker : marker + std::to_string(i + 1)));
    std::set<Label> in1(s.side1.begin(), s.side1.end());
    Side s1, s2;
    for (int e = 0; e < m.size(); ++e) (in1.count(m.label(e)) ? s1 : s2).add(m.label(e), m.column(e));
    for (std::size_t i = 0; i < zc.size(); ++i) {
        s1.add(out.shared[i], zc[i]);
        s2.add(out.shared[i], zc[i]);
    }
    out.first = BinaryMatroid::from_columns(s1.labels, s1.cols);
    out.second = BinaryMatroid::from_columns(s2.labels, s2.cols);
    return out;
}

namespace {

DecompNode build(const BinaryMatroid& m, const std::vector<Triangle>& ts, LabelPool& pool, int& counter) {
    DecompNode node;
    node.matroid = m;
    node.triangles = ts;
    Simplification si = simplify(m);
    if (!is_3connected(si.matroid)) throw std::invalid_argument("build_tree: simplification is not 3-connected");
    auto sep = find_separation_general(si.matroid, 3, 4);
    if (!sep) return node;
    if (sep->order != 3 || si.matroid.rank_of_labels(sep->side1) < 3 || si.matroid.rank_of_labels(sep->side2) < 3)
        throw std::logic_error("build_tree: separation does not satisfy the split hypotheses");

    // Induce the separation on m: an element goes with its parallel class; loops join side 1.
    std::set<Label> y1;
    for (const auto& rep : sep->side1)
        for (const auto& l : si.classes.at(rep)) y1.insert(l);
    for (const auto& l : si.loops) y1.insert(l);
    std::vector<Label> x1, x2;
    for (const auto& l : m.labels()) (y1.count(l) ? x1 : x2).push_back(l);
    Subspace a = span_of(m, x1), b = span_of(m, x2);
    Subspace z = span_intersection(a, b);
    if (z.dim() != 2) throw std::logic_error("build_tree: induced separation is not exact");
    std::vector<Word> zc = nonzero_elements(z);
    int id = counter++;
    Triangle t;
    for (int i = 0; i < 3; ++i) t.push_back(pool.fresh("T" + std::to_string(id) + "." + std::to_string(i + 1)));

    Side sides[2];
    for (const auto& l : x1) sides[0].add(l, m.column(m.index_of(l)));
    for (const auto& l : x2) sides[1].add(l, m.column(m.index_of(l)));

    // Shift each straddling triangle onto the side holding two of its elements.
    for (const auto& tri : ts) {
        int cnt[2] = {0, 0};
        for (const auto& l : tri) ++cnt[sides[0].find(l) >= 0 ? 0 : 1];
        if (cnt[0] == 3 || cnt[1] == 3) continue;
        int i = cnt[0] == 1 ? 0 : 1, j = 1 - i;
        Label e;
        for (const auto& l : tri)
            if (sides[i].find(l) >= 0) e = l;
        Label ek = pool.fresh(e + "'");
        int pos = sides[i].find(e);
        Word col = sides[i].cols[static_cast<std::size_t>(pos)];
        if (!z.contains(col)) throw std::logic_error("build_tree: shifted element outside the sum triangle span");
        sides[i].labels[static_cast<std::size_t>(pos)] = ek;
        sides[j].add(e, col);
        node.shifted.push_back(ek);
    }
    std::vector<Triangle> tsub[2];
    for (const auto& tri : ts) tsub[sides[0].find(tri[0]) >= 0 ? 0 : 1].push_back(tri);
    for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < 3; ++i) sides[k].add(t[static_cast<std::size_t>(i)], zc[static_cast<std::size_t>(i)]);
        tsub[k].push_back(t);
    }
    node.sum_triangle = t;
    for (int k = 0; k < 2; ++k) {
        BinaryMatroid child = BinaryMatroid::from_columns(sides[k].labels, sides[k].cols);
        child.name = m.name;
        node.children.push_back(build(child, tsub[k], pool, counter));
    }
    return node;
}

}  // namespace

DecompNode build_tree(const BinaryMatroid& m, const std::vector<Triangle>& ts) {
    std::set<Label> seen;
    for (const auto& t : ts) {
        if (t.size() != 3 || !is_circuit(m, m.indices_of(t))) throw std::invalid_argument("build_tree: listed set is not a triangle");
        for (const auto& l : t)
            if (!seen.insert(l).second) throw std::invalid_argument("build_tree: triangles are not disjoint");
    }
    LabelPool pool(m);
    int counter = 1;
    return build(m, ts, pool, counter);
}

std::vector<Leaf> leaves(const DecompNode& t) {
    if (t.is_leaf()) return {Leaf{t.matroid, t.triangles}};
    std::vector<Leaf> out;
    for (const auto& c : t.children) {
        auto sub = leaves(c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::size_t count_nodes(const DecompNode& t) {
    std::size_t n = 1;
    for (const auto& c : t.children) n += count_nodes(c);
    return n;
}

BinaryMatroid recompose(const DecompNode& t) {
    if (t.is_leaf()) return t.matroid;
    BinaryMatroid plus = sym_diff(recompose(t.children[0]), recompose(t.children[1]));
    BinaryMatroid out = plus.delete_elements(plus.indices_of(t.shifted));
    return reordered(out, t.matroid.labels());
}

namespace {

void split_pieces(const BinaryMatroid& in, int min_size, int& next, std::vector<BinaryMatroid>& out) {
    BinaryMatroid m = simplify(in).matroid;
    if (m.size() < min_size) return;
    auto comps = components(m);
    if (comps.size() > 1) {
        for (const auto& c : comps) split_pieces(m.restrict_to(c), min_size, next, out);
        return;
    }
    if (auto sep = find_separation(m, 2)) {
        SplitResult sr = split_along(m, *sep, "q" + std::to_string(next++));
        split_pieces(sr.first, min_size, next, out);
        split_pieces(sr.second, min_size, next, out);
        return;
    }
    out.push_back(m);
}

}  // namespace

std::vector<BinaryMatroid> three_connected_pieces(const BinaryMatroid& m, int min_size) {
    std::vector<BinaryMatroid> out;
    int next = 0;
    split_pieces(m, min_size, next, out);
    return out;
}

}  // namespace bmat
