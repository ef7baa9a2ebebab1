#include "bmat/composition.hpp"

#include <algorithm>
#include <set>

namespace bmat {

namespace {

std::vector<Label> shared_labels(const BinaryMatroid& a, const BinaryMatroid& b) {
    std::vector<Label> out;
    for (const auto& l : a.labels())
        if (b.has_label(l)) out.push_back(l);
    return out;
}

// Cycle space of m as rows over `ground`, which must contain E(m).
void append_cycles(BitMatrix& dst, const BinaryMatroid& m, const std::vector<int>& pos) {
    BitMatrix cyc = cycle_space(m);
    for (std::size_t r = 0; r < cyc.rows(); ++r) {
        BitMatrix row(1, dst.cols());
        for (int e = 0; e < m.size(); ++e)
            if (cyc.get(r, static_cast<std::size_t>(e))) row.set(0, static_cast<std::size_t>(pos[static_cast<std::size_t>(e)]), true);
        dst.append_row(row, 0);
    }
}

std::string fresh_label(const BinaryMatroid& a, const std::string& base) {
    std::string l = base;
    for (int k = 0; a.has_label(l); ++k) l = base + "~" + std::to_string(k);
    return l;
}

// Basis of m whose first members are `first` (assumed independent), then
// coordinates of every column in it.
std::vector<Word> coords_with_leading(const BinaryMatroid& m, const ElementSet& first) {
    ElementSet basis = first;
    Subspace s(m.rank());
    for (int e : first)
        if (!s.insert(m.column(e))) throw std::invalid_argument("coords_with_leading: dependent");
    for (int e = 0; e < m.size() && s.dim() < m.rank(); ++e)
        if (s.insert(m.column(e))) basis.push_back(e);
    return m.coordinates_in_basis(basis);
}

}  // namespace

BinaryMatroid reordered(const BinaryMatroid& m, const std::vector<Label>& order) {
    ElementSet idx = m.indices_of(order);
    if (static_cast<int>(idx.size()) != m.size()) throw std::invalid_argument("reordered: not a permutation");
    BinaryMatroid out = m.restrict_to(idx);
    if (out.rank() != m.rank()) throw std::invalid_argument("reordered: not a permutation");
    return out;
}

BinaryMatroid sym_diff(const BinaryMatroid& a, const BinaryMatroid& b) {
    std::vector<Label> shared = shared_labels(a, b);
    std::set<Label> sh(shared.begin(), shared.end());
    // Columns: shared first, then E1-E2, then E2-E1.
    std::vector<Label> out_labels;
    for (const auto& l : a.labels())
        if (!sh.count(l)) out_labels.push_back(l);
    for (const auto& l : b.labels())
        if (!sh.count(l)) out_labels.push_back(l);
    std::unordered_map<Label, int> col;
    int k = 0;
    for (const auto& l : shared) col[l] = k++;
    for (const auto& l : out_labels) col[l] = k++;
    std::vector<int> pa, pb;
    for (const auto& l : a.labels()) pa.push_back(col.at(l));
    for (const auto& l : b.labels()) pb.push_back(col.at(l));
    BitMatrix gen(0, static_cast<std::size_t>(k));
    append_cycles(gen, a, pa);
    append_cycles(gen, b, pb);
    // Rows whose pivot lies past the shared block vanish on the shared block.
    RrefResult rr = rref(gen);
    std::vector<std::size_t> keep_cols;
    for (std::size_t c = shared.size(); c < static_cast<std::size_t>(k); ++c) keep_cols.push_back(c);
    BitMatrix cyc(0, out_labels.size());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] < shared.size()) continue;
        BitMatrix row(1, static_cast<std::size_t>(k));
        for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c)
            if (rr.matrix.get(r, c)) row.set(0, c, true);
        cyc.append_row(row.select_columns(keep_cols), 0);
    }
    return BinaryMatroid(out_labels, nullspace(cyc));
}

BinaryMatroid direct_sum(const BinaryMatroid& a, const BinaryMatroid& b) {
    if (!shared_labels(a, b).empty()) throw std::invalid_argument("direct_sum: ground sets overlap");
    if (a.rank() + b.rank() > 64) return sym_diff(a, b);
    std::vector<Label> ls = a.labels();
    std::vector<Word> cs = a.columns();
    for (int i = 0; i < b.size(); ++i) {
        ls.push_back(b.label(i));
        cs.push_back(b.column(i) << a.rank());
    }
    return BinaryMatroid::from_columns(ls, cs);
}

BinaryMatroid delta_y(const BinaryMatroid& m, const std::vector<Label>& t) {
    if (t.size() != 3) throw std::invalid_argument("delta_y: need three labels");
    ElementSet ti = m.indices_of(t);
    if (!is_circuit(m, ti)) throw std::invalid_argument("delta_y: not a triangle");
    // K4 on vertices 0..3: a_i is the edge opposite vertex i among {1,2,3},
    // a_i' is the edge 0i; {a_j', a_k', a_i} is a triangle.
    std::vector<Label> prime;
    for (int i = 0; i < 3; ++i) prime.push_back(fresh_label(m, "__dy" + std::to_string(i)));
    std::vector<Label> nl{t[0], t[1], t[2], prime[0], prime[1], prime[2]};
    std::vector<Word> nc{0b110, 0b101, 0b011, 0b001, 0b010, 0b100};
    BinaryMatroid n = BinaryMatroid::from_columns(nl, nc);
    BinaryMatroid s = sym_diff(n, m);
    std::map<Label, Label> back;
    for (int i = 0; i < 3; ++i) back[prime[static_cast<std::size_t>(i)]] = t[static_cast<std::size_t>(i)];
    BinaryMatroid out = reordered(s.relabeled(back), m.labels());
    out.name = m.name;
    return out;
}

BinaryMatroid delta_batch(const BinaryMatroid& m, const std::vector<std::vector<Label>>& ts) {
    std::set<Label> seen;
    for (const auto& t : ts) {
        if (t.size() != 3 || !is_circuit(m, m.indices_of(t)))
            throw std::invalid_argument("delta_batch: member is not a triangle");
        for (const auto& l : t)
            if (!seen.insert(l).second) throw std::invalid_argument("delta_batch: triangles overlap");
    }
    BinaryMatroid out = m;
    for (const auto& t : ts) out = delta_y(out, t);
    return out;
}

const char* to_string(SumFailure f) {
    switch (f) {
        case SumFailure::EmptyGround: return "empty ground set";
        case SumFailure::OverlapNotEmpty: return "ground sets not disjoint";
        case SumFailure::OverlapNotSingleton: return "ground sets do not meet in exactly one element";
        case SumFailure::BasepointLoop: return "basepoint is a loop";
        case SumFailure::BasepointColoop: return "basepoint is a coloop";
        case SumFailure::TooFewElements: return "too few elements";
        case SumFailure::OverlapNotTriangle: return "ground sets do not meet in a common triangle";
        case SumFailure::TriangleContainsCocircuit: return "common triangle contains a cocircuit";
        case SumFailure::BadOrder: return "order must be 1, 2 or 3";
    }
    return "unknown";
}

std::optional<SumError> check_k_sum(const BinaryMatroid& a, const BinaryMatroid& b, int k) {
    auto fail = [](SumFailure f, int op) {
        return SumError(f, op, std::string("k_sum: ") + to_string(f) + (op ? " in operand " + std::to_string(op) : ""));
    };
    std::vector<Label> sh = shared_labels(a, b);
    const BinaryMatroid* ms[2] = {&a, &b};
    switch (k) {
        case 1:
            if (a.size() == 0) return fail(SumFailure::EmptyGround, 1);
            if (b.size() == 0) return fail(SumFailure::EmptyGround, 2);
            if (!sh.empty()) return fail(SumFailure::OverlapNotEmpty, 0);
            return std::nullopt;
        case 2:
            if (sh.size() != 1) return fail(SumFailure::OverlapNotSingleton, 0);
            for (int i = 0; i < 2; ++i) {
                const BinaryMatroid& m = *ms[i];
                int p = m.index_of(sh[0]);
                if (m.is_loop(p)) return fail(SumFailure::BasepointLoop, i + 1);
                if (m.rank_of(m.complement({p})) < m.rank()) return fail(SumFailure::BasepointColoop, i + 1);
                if (m.size() < 3) return fail(SumFailure::TooFewElements, i + 1);
            }
            return std::nullopt;
        case 3:
            if (sh.size() != 3) return fail(SumFailure::OverlapNotTriangle, 0);
            for (int i = 0; i < 2; ++i) {
                const BinaryMatroid& m = *ms[i];
                ElementSet t = m.indices_of(sh);
                if (!is_circuit(m, t)) return fail(SumFailure::OverlapNotTriangle, i + 1);
                if (m.rank_of(m.complement(t)) < m.rank()) return fail(SumFailure::TriangleContainsCocircuit, i + 1);
                if (m.size() < 7) return fail(SumFailure::TooFewElements, i + 1);
            }
            return std::nullopt;
        default:
            return fail(SumFailure::BadOrder, 0);
    }
}

BinaryMatroid k_sum(const BinaryMatroid& a, const BinaryMatroid& b, int k) {
    if (auto err = check_k_sum(a, b, k)) throw *err;
    return sym_diff(a, b);
}

BinaryMatroid parallel_connection(const BinaryMatroid& a, const BinaryMatroid& b, const Label& p) {
    std::vector<Label> sh = shared_labels(a, b);
    if (sh.size() != 1 || sh[0] != p) throw std::invalid_argument("parallel_connection: ground sets must meet exactly in the basepoint");
    int pa = a.index_of(p), pb = b.index_of(p);
    if (a.is_loop(pa)) return direct_sum(a, b.contract_elements({pb}));
    if (b.is_loop(pb)) return direct_sum(a.contract_elements({pa}), b);
    int r1 = a.rank(), r2 = b.rank();
    if (r1 + r2 - 1 > 64) throw std::invalid_argument("parallel_connection: rank exceeds 64");
    std::vector<Word> ca = coords_with_leading(a, {pa});
    std::vector<Word> cb = coords_with_leading(b, {pb});
    std::vector<Label> ls = a.labels();
    std::vector<Word> cs = ca;
    for (int i = 0; i < b.size(); ++i) {
        if (i == pb) continue;
        Word c = cb[static_cast<std::size_t>(i)];
        ls.push_back(b.label(i));
        cs.push_back((c & 1u) | ((c >> 1) << r1));
    }
    return BinaryMatroid::from_columns(ls, cs);
}

BinaryMatroid generalized_parallel_connection(const BinaryMatroid& a, const BinaryMatroid& b,
                                              const std::vector<Label>& t) {
    std::vector<Label> sh = shared_labels(a, b);
    std::set<Label> s1(sh.begin(), sh.end()), s2(t.begin(), t.end());
    if (t.size() != 3 || s1 != s2) throw std::invalid_argument("generalized_parallel_connection: ground sets must meet exactly in the triangle");
    if (!is_circuit(a, a.indices_of(t)) || !is_circuit(b, b.indices_of(t)))
        throw std::invalid_argument("generalized_parallel_connection: not a triangle of both");
    int r1 = a.rank(), r2 = b.rank();
    if (r1 + r2 - 2 > 64) throw std::invalid_argument("generalized_parallel_connection: rank exceeds 64");
    std::vector<Word> ca = coords_with_leading(a, {a.index_of(t[0]), a.index_of(t[1])});
    std::vector<Word> cb = coords_with_leading(b, {b.index_of(t[0]), b.index_of(t[1])});
    std::vector<Label> ls = a.labels();
    std::vector<Word> cs = ca;
    for (int i = 0; i < b.size(); ++i) {
        if (s2.count(b.label(i))) continue;
        Word c = cb[static_cast<std::size_t>(i)];
        ls.push_back(b.label(i));
        cs.push_back((c & 3u) | ((c >> 2) << r1));
    }
    return BinaryMatroid::from_columns(ls, cs);
}

}  // namespace bmat
