#include "bmat/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmat {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("non-binary entry");
            if (ch == '1') m.set(r, c, true);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<Word>& cols, std::size_t rows) {
    if (rows > 64) throw std::invalid_argument("from_columns: more than 64 rows");
    BitMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if ((cols[c] >> r) & 1u) m.set(r, c, true);
    return m;
}

void BitMatrix::xor_row_into(std::size_t dst, std::size_t src) {
    Word* d = row(dst);
    const Word* s = row(src);
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + wpr_, row(b));
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const Word* p = row(r);
    for (std::size_t w = 0; w < wpr_; ++w)
        if (p[w]) return false;
    return true;
}

Word BitMatrix::column_word(std::size_t c) const {
    if (rows_ > 64) throw std::invalid_argument("column_word: more than 64 rows");
    Word w = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) w |= bit(static_cast<int>(r));
    return w;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    BitMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (get(r, cols[j])) m.set(r, j, true);
    return m;
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t>& rs) const {
    BitMatrix m(rs.size(), cols_);
    for (std::size_t i = 0; i < rs.size(); ++i)
        std::copy(row(rs[i]), row(rs[i]) + wpr_, m.row(i));
    return m;
}

void BitMatrix::append_row(const BitMatrix& src, std::size_t r) {
    if (src.cols_ != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), src.row(r), src.row(r) + wpr_);
    ++rows_;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, {}};
    BitMatrix& a = res.matrix;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < a.cols() && prow < a.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < a.rows() && !a.get(sel, c)) ++sel;
        if (sel == a.rows()) continue;
        a.swap_rows(sel, prow);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != prow && a.get(r, c)) a.xor_row_into(r, prow);
        res.pivots.push_back(c);
        ++prow;
    }
    return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitMatrix row_space_basis(const BitMatrix& m) {
    RrefResult r = rref(m);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) keep.push_back(i);
    return r.matrix.select_rows(keep);
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

BitMatrix nullspace(const BitMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    BitMatrix ns(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t f = free_cols[i];
        ns.set(i, f, true);
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            if (r.matrix.get(k, f)) ns.set(i, r.pivots[k], true);
    }
    return ns;
}

Word compress_bits(Word v, Word mask) {
    Word out = 0;
    int k = 0;
    while (mask) {
        int b = lowest_bit(mask);
        mask &= mask - 1;
        if ((v >> b) & 1u) out |= bit(k);
        ++k;
    }
    return out;
}

Word expand_bits(Word v, Word mask) {
    Word out = 0;
    int k = 0;
    while (mask) {
        int b = lowest_bit(mask);
        mask &= mask - 1;
        if ((v >> k) & 1u) out |= bit(b);
        ++k;
    }
    return out;
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) {
    if (ambient_dim < 0 || ambient_dim > 64)
        throw std::invalid_argument("Subspace: ambient dimension must be in [0,64]");
}

Subspace Subspace::span(int ambient_dim, const std::vector<Word>& vectors) {
    Subspace s(ambient_dim);
    for (Word v : vectors) s.insert(v);
    return s;
}

Word Subspace::reduce(Word v) const {
    for (Word b : basis_)
        if ((v >> lowest_bit(b)) & 1u) v ^= b;
    return v;
}

bool Subspace::insert(Word v) {
    v = reduce(v);
    if (!v) return false;
    int p = lowest_bit(v);
    for (Word& b : basis_)
        if ((b >> p) & 1u) b ^= v;
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), v,
                                [](Word a, Word b) { return lowest_bit(a) < lowest_bit(b); });
    basis_.insert(pos, v);
    pivots_ |= bit(p);
    return true;
}

std::vector<Word> Subspace::elements() const {
    if (dim() > 26) throw std::length_error("Subspace::elements: dimension too large");
    std::vector<Word> out{0};
    out.reserve(std::size_t{1} << dim());
    for (Word b : basis_) {
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
    }
    return out;
}

Word Subspace::quotient_coords(Word v) const {
    Word full = ambient_ == 64 ? ~Word{0} : (bit(ambient_) - 1);
    return compress_bits(reduce(v), full & ~pivots_);
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("join: ambient mismatch");
    Subspace s = a;
    for (Word v : b.basis()) s.insert(v);
    return s;
}

Subspace span_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("span_intersection: ambient mismatch");
    // Residues of a's basis modulo b, tracking which combination produced
    // them; a vanishing residue marks a combination lying in b.
    const auto& av = a.basis();
    std::vector<std::pair<Word, Word>> rows;  // (residue, combination mask)
    Subspace out(a.ambient_dim());
    for (std::size_t i = 0; i < av.size(); ++i) {
        Word res = b.reduce(av[i]);
        Word comb = bit(static_cast<int>(i));
        for (auto& [r, c] : rows)
            if (res && ((res >> lowest_bit(r)) & 1u)) { res ^= r; comb ^= c; }
        if (res) {
            rows.push_back({res, comb});
        } else {
            Word v = 0;
            for (std::size_t j = 0; j < av.size(); ++j)
                if ((comb >> j) & 1u) v ^= av[j];
            out.insert(v);
        }
    }
    return out;
}

Subspace common_kernel(int ambient_dim, const std::vector<Word>& functionals) {
    BitMatrix m(functionals.size(), static_cast<std::size_t>(ambient_dim));
    for (std::size_t i = 0; i < functionals.size(); ++i)
        for (int c = 0; c < ambient_dim; ++c)
            if ((functionals[i] >> c) & 1u) m.set(i, c, true);
    BitMatrix ns = nullspace(m);
    Subspace s(ambient_dim);
    for (std::size_t r = 0; r < ns.rows(); ++r) s.insert(ambient_dim ? ns.row(r)[0] : 0);
    return s;
}

namespace {

// Affine constraint system {f : f.p = 1 for every point p assigned}. Rows
// are kept in insertion order, each reduced against its predecessors, so
// popping the last row undoes an insertion.
struct AffineClass {
    std::vector<Word> vec;
    std::vector<unsigned char> rhs;

    // Returns 0 inconsistent, 1 consistent and appended, 2 consistent and redundant.
    int add(Word p) {
        unsigned char r = 1;
        for (std::size_t i = 0; i < vec.size(); ++i)
            if ((p >> lowest_bit(vec[i])) & 1u) { p ^= vec[i]; r ^= rhs[i]; }
        if (!p) return r ? 0 : 2;
        vec.push_back(p);
        rhs.push_back(r);
        return 1;
    }
    void pop() { vec.pop_back(); rhs.pop_back(); }

    Word solve() const {
        // Back substitution over pivots; free coordinates set to zero.
        Word f = 0;
        for (std::size_t i = vec.size(); i-- > 0;) {
            int p = lowest_bit(vec[i]);
            unsigned char val = rhs[i] ^ static_cast<unsigned char>(popcount(f & vec[i] & ~bit(p)) & 1);
            if (val) f |= bit(p);
        }
        return f;
    }
};

struct CoverSearch {
    const std::vector<Word>& pts;
    int k;
    std::vector<AffineClass> classes;
    std::vector<int> assign;

    bool dfs(std::size_t i, int used) {
        if (i == pts.size()) return true;
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            int st = classes[c].add(pts[i]);
            if (st == 0) continue;
            assign[i] = c;
            if (dfs(i + 1, std::max(used, c + 1))) return true;
            if (st == 1) classes[c].pop();
        }
        return false;
    }
};

}  // namespace

AvoidingResult max_avoiding_subspace_with_certificate(const std::vector<Word>& points,
                                                      int ambient_dim) {
    if (ambient_dim < 0 || ambient_dim > 63)
        throw std::invalid_argument("max_avoiding_subspace: ambient dimension must be in [0,63]");
    Word full = bit(ambient_dim) - 1;
    std::vector<Word> pts;
    for (Word p : points) {
        if (p == 0) throw std::invalid_argument("max_avoiding_subspace: zero vector (loop)");
        if (p & ~full) throw std::invalid_argument("max_avoiding_subspace: point outside ambient space");
        pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Points of small weight first: they constrain the classes early.
    std::stable_sort(pts.begin(), pts.end(),
                     [](Word a, Word b) { return popcount(a) < popcount(b); });
    if (pts.empty()) {
        return {common_kernel(ambient_dim, {}), {}};
    }
    for (int k = 1; k <= ambient_dim; ++k) {
        CoverSearch s{pts, k, std::vector<AffineClass>(k), std::vector<int>(pts.size(), -1)};
        if (!s.dfs(0, 0)) continue;
        std::vector<Word> fs;
        for (int c = 0; c < k; ++c) fs.push_back(s.classes[c].solve());
        return {common_kernel(ambient_dim, fs), fs};
    }
    throw std::logic_error("max_avoiding_subspace: unreachable");
}

Subspace max_avoiding_subspace(const std::vector<Word>& points, int ambient_dim) {
    return max_avoiding_subspace_with_certificate(points, ambient_dim).subspace;
}

}  // namespace bmat
