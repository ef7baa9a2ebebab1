#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bmat {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline int popcount(Word w) { return __builtin_popcountll(w); }
inline int lowest_bit(Word w) { return __builtin_ctzll(w); }
inline Word bit(int i) { return Word{1} << i; }

// Dense GF(2) matrix, row-major, 64 columns per word. Padding bits past
// cols() in the last word of each row are always zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // Each string is one row of '0'/'1' characters.
    static BitMatrix from_rows(const std::vector<std::string>& rows);
    // Columns given as words; rows <= 64.
    static BitMatrix from_columns(const std::vector<Word>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        Word& w = data_[r * wpr_ + c / 64];
        if (v) w |= bit(c % 64); else w &= ~bit(c % 64);
    }
    void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + c / 64] ^= bit(c % 64); }

    Word* row(std::size_t r) { return data_.data() + r * wpr_; }
    const Word* row(std::size_t r) const { return data_.data() + r * wpr_; }
    void xor_row_into(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;

    // Column c packed into a word; requires rows() <= 64.
    Word column_word(std::size_t c) const;

    BitMatrix transpose() const;
    BitMatrix select_columns(const std::vector<std::size_t>& cols) const;
    BitMatrix select_rows(const std::vector<std::size_t>& rows) const;
    void append_row(const BitMatrix& src, std::size_t r);

    std::string to_string() const;
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<Word> data_;
};

std::size_t rank(const BitMatrix& m);

struct RrefResult {
    BitMatrix matrix;
    std::vector<std::size_t> pivots;
};
RrefResult rref(const BitMatrix& m);

// Rows of the result form a basis of {x : m x = 0}.
BitMatrix nullspace(const BitMatrix& m);

// Nonzero rows of the RREF: canonical basis of the row space.
BitMatrix row_space_basis(const BitMatrix& m);
bool same_row_space(const BitMatrix& a, const BitMatrix& b);

// Subspace of GF(2)^ambient (ambient <= 64) kept in fully reduced echelon
// form; pivots are lowest set bits, strictly increasing along the basis.
class Subspace {
public:
    explicit Subspace(int ambient_dim = 0);
    static Subspace span(int ambient_dim, const std::vector<Word>& vectors);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Word>& basis() const { return basis_; }
    Word pivot_mask() const { return pivots_; }

    Word reduce(Word v) const;
    bool contains(Word v) const { return reduce(v) == 0; }
    // Returns true when v was outside the subspace.
    bool insert(Word v);
    // Every vector of the subspace; dim() must be small.
    std::vector<Word> elements() const;
    // Projection onto the quotient: v mod this, compressed to non-pivot bits.
    Word quotient_coords(Word v) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    int ambient_;
    Word pivots_ = 0;
    std::vector<Word> basis_;
};

Subspace join(const Subspace& a, const Subspace& b);
Subspace span_intersection(const Subspace& a, const Subspace& b);
// {x : f.x = 0 for all f in functionals}
Subspace common_kernel(int ambient_dim, const std::vector<Word>& functionals);

// Largest subspace of GF(2)^ambient meeting none of the points. Exact: the
// search finds the fewest linear functionals such that every point has a
// functional evaluating to 1 on it, by exhaustive branching over the
// assignment of points to functionals.
struct AvoidingResult {
    Subspace subspace;
    std::vector<Word> functionals;  // common kernel is the subspace
};
AvoidingResult max_avoiding_subspace_with_certificate(const std::vector<Word>& points,
                                                      int ambient_dim);
Subspace max_avoiding_subspace(const std::vector<Word>& points, int ambient_dim);

// Extract bits of v at the set positions of mask, packed to the low end.
Word compress_bits(Word v, Word mask);
// Inverse of compress_bits.
Word expand_bits(Word v, Word mask);

}  // namespace bmat
