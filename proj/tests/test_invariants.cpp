#include <gtest/gtest.h>

#include <random>

#include "bmat/catalog.hpp"
#include "bmat/composition.hpp"
#include "bmat/invariants.hpp"

using namespace bmat;

namespace {

IntPolynomial poly(std::initializer_list<int> c) {
    IntPolynomial p;
    for (int x : c) p.coeffs.push_back(x);
    return p;
}

std::vector<int> ts() {
    std::vector<int> v;
    for (int t = 2; t <= 16; ++t) v.push_back(t);
    return v;
}

}  // namespace

TEST(Invariants, SmallPolynomials) {
    BinaryMatroid coloop = BinaryMatroid::from_columns({"x"}, {1});
    EXPECT_EQ(characteristic_polynomial(coloop), poly({-1, 1}));
    // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    EXPECT_EQ(characteristic_polynomial(named("K4")), poly({-6, 11, -6, 1}));
    BinaryMatroid loop = BinaryMatroid::from_columns({"x", "y"}, {0, 1});
    EXPECT_TRUE(characteristic_polynomial(loop).coeffs.empty());
    Graph tree;
    tree.num_vertices = 3;
    tree.add_edge(0, 1, "a");
    tree.add_edge(1, 2, "b");
    EXPECT_TRUE(flow_polynomial(tree).coeffs.empty());  // bridges carry no nowhere-zero flow
    EXPECT_EQ(flow_polynomial(complete_graph(4)), characteristic_polynomial(named("K4").dual()));
}

TEST(Invariants, TutteDualityAndChromaticCrossCheck) {
    std::mt19937 rng(3);
    for (int it = 0; it < 10; ++it) {
        std::vector<Label> ls;
        std::vector<Word> cs;
        for (int i = 0; i < 10; ++i) {
            ls.push_back("g" + std::to_string(i));
            cs.push_back(std::uniform_int_distribution<Word>(1, 31)(rng));
        }
        BinaryMatroid m = BinaryMatroid::from_columns(ls, cs);
        IntPolynomial2 t = tutte_polynomial(m);
        EXPECT_EQ(tutte_polynomial(m.dual()), t.swapped());
        EXPECT_EQ(characteristic_from_tutte(t, m.rank()), characteristic_polynomial(m));
    }
}

TEST(Invariants, CriticalExponents) {
    EXPECT_EQ(critical_exponent(named("PG32")).exponent, 4);
    for (int r : {4, 6, 8}) EXPECT_EQ(critical_exponent(mobius_triadic(r)).exponent, 1);
    for (const char* k : {"F7", "MK5", "R10", "T12", "Delta5"}) {
        BinaryMatroid m = named(k);
        EXPECT_EQ(critical_exponent(m).exponent, critical_exponent_from_chi(characteristic_polynomial(m))) << k;
    }
}

TEST(Invariants, SumIdentities) {
    BinaryMatroid a = named("K4").relabeled(std::map<Label, Label>{{"01", "p"}});
    BinaryMatroid b = cycle_matroid(complete_graph(4, "q")).relabeled(std::map<Label, Label>{{"q01", "p"}});
    EXPECT_TRUE(check_2sum_identity(a, b, "p", ts()));
    auto [m1, m2] = r12_terms();
    EXPECT_TRUE(check_3sum_identity(m1, m2, {"01", "02", "12"}, ts()));
}
