#include <gtest/gtest.h>

#include <random>

#include "bmat/gf2.hpp"

using namespace bmat;

TEST(Gf2, RankAndNullspace) {
    BitMatrix m = BitMatrix::from_rows({"1101", "0110", "1011"});
    EXPECT_EQ(rank(m), 2u);
    BitMatrix ns = nullspace(m);
    EXPECT_EQ(ns.rows(), 2u);
    for (std::size_t k = 0; k < ns.rows(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            int s = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) s ^= m.get(r, c) & ns.get(k, c);
            EXPECT_EQ(s, 0);
        }
}

TEST(Gf2, WideMatrices) {
    std::mt19937_64 rng(7);
    BitMatrix m(20, 150);
    for (std::size_t r = 0; r < 20; ++r)
        for (std::size_t c = 0; c < 150; ++c) m.set(r, c, rng() & 1);
    EXPECT_EQ(rank(m), 20u);
    EXPECT_EQ(nullspace(m).rows(), 130u);
    EXPECT_TRUE(same_row_space(m, row_space_basis(m)));
    EXPECT_EQ(m.transpose().transpose(), m);
}

TEST(Gf2, SubspaceOps) {
    Subspace a = Subspace::span(6, {0b000011, 0b000101});
    Subspace b = Subspace::span(6, {0b000110, 0b110000});
    EXPECT_EQ(a.dim(), 2);
    EXPECT_EQ(join(a, b).dim(), 3);
    Subspace i = span_intersection(a, b);
    EXPECT_EQ(i.dim(), 1);
    EXPECT_TRUE(i.contains(0b000110));
    Subspace k = common_kernel(4, {0b1111});
    EXPECT_EQ(k.dim(), 3);
    EXPECT_EQ(compress_bits(expand_bits(0b101, 0b11010), 0b11010), 0b101u);
}

TEST(Gf2, AvoidingSubspaceMatchesBruteForce) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 3 + trial % 3;
        std::vector<Word> pts;
        for (Word v = 1; v < (Word{1} << d); ++v)
            if (rng() % 3) pts.push_back(v);
        if (pts.empty()) continue;
        auto res = max_avoiding_subspace_with_certificate(pts, d);
        for (Word p : pts) EXPECT_FALSE(res.subspace.contains(p));
        // brute force: largest subspace spanned by non-points
        int best = 0;
        std::vector<char> bad(Word{1} << d, 0);
        for (Word p : pts) bad[p] = 1;
        for (Word mask = 0; mask < (Word{1} << ((1 << d) - 1)) && d <= 4; ++mask) {
            std::vector<Word> g;
            for (int v = 1; v < (1 << d); ++v)
                if ((mask >> (v - 1)) & 1) g.push_back(static_cast<Word>(v));
            Subspace s = Subspace::span(d, g);
            if (s.dim() <= best) continue;
            bool ok = true;
            for (Word e : s.elements()) if (bad[e]) { ok = false; break; }
            if (ok) best = s.dim();
        }
        if (d <= 4) EXPECT_EQ(res.subspace.dim(), best);
    }
}
