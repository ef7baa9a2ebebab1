#include <gtest/gtest.h>

#include <random>

#include "bmat/matroid.hpp"

using namespace bmat;

namespace {
BinaryMatroid fano() {
    std::vector<Label> ls{"1", "2", "3", "4", "5", "6", "7"};
    return BinaryMatroid::from_columns(ls, {1, 2, 3, 4, 5, 6, 7});
}
BinaryMatroid random_matroid(std::mt19937_64& rng, int r, int n) {
    std::vector<Word> cols;
    std::vector<Label> ls;
    for (int i = 0; i < n; ++i) {
        cols.push_back(rng() & ((Word{1} << r) - 1));
        ls.push_back("e" + std::to_string(i));
    }
    return BinaryMatroid::from_columns(ls, cols);
}
}  // namespace

TEST(Matroid, FanoBasics) {
    BinaryMatroid f = fano();
    EXPECT_EQ(f.rank(), 3);
    EXPECT_EQ(triangles(f).size(), 7u);
    EXPECT_TRUE(is_simple(f));
    BinaryMatroid d = f.dual();
    EXPECT_EQ(d.rank(), 4);
    EXPECT_TRUE(d.dual().same_matroid(f));
    EXPECT_EQ(triads(f).size(), 0u);
    EXPECT_EQ(small_supports(f, SupportKind::Cocircuit, 4).size(), 7u);
}

TEST(Matroid, MinorDualityIdentities) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        BinaryMatroid m = random_matroid(rng, 5, 10);
        BinaryMatroid c = m.contract_elements({0, 3});
        BinaryMatroid d = m.dual().delete_elements({0, 3}).dual();
        EXPECT_TRUE(c.same_matroid(d));
        EXPECT_EQ(m.dual().rank(), m.corank());
        for (int i = 0; i < m.size(); ++i)
            EXPECT_EQ(m.lambda({i}), m.dual().lambda({i}));
    }
}

TEST(Matroid, IsomorphismOfRelabeledCopies) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        BinaryMatroid m = random_matroid(rng, 4 + t % 3, 9 + t % 5);
        std::vector<Label> ls = m.labels();
        std::vector<int> perm(ls.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Label> pl;
        std::vector<Word> pc;
        for (int p : perm) {
            pl.push_back("x" + ls[static_cast<std::size_t>(p)]);
            pc.push_back(m.column(p));
        }
        BinaryMatroid q = BinaryMatroid::from_columns(pl, pc);
        auto iso = find_isomorphism(m, q);
        ASSERT_TRUE(iso.has_value());
        EXPECT_TRUE(verify_isomorphism(m, q, *iso));
    }
    BinaryMatroid f = fano();
    EXPECT_FALSE(find_isomorphism(f, f.delete_elements({0}).with_element("z", 0)).has_value());
}
