#include <gtest/gtest.h>

#include <random>

#include "bmat/catalog.hpp"
#include "bmat/recognition.hpp"

using namespace bmat;

namespace {

Graph random_graph(std::mt19937& rng, int nv, int ne) {
    Graph g;
    g.num_vertices = nv;
    std::uniform_int_distribution<int> pick(0, nv - 1);
    for (int i = 1; i < nv; ++i) g.add_edge(i, std::uniform_int_distribution<int>(0, i - 1)(rng), "t" + std::to_string(i));
    for (int i = 0; i < ne; ++i) g.add_edge(pick(rng), pick(rng), "x" + std::to_string(i));
    return g;
}

}  // namespace

TEST(Recognition, GraphicBasics) {
    EXPECT_TRUE(graph_realization(cycle_matroid(complete_graph(5))));
    EXPECT_TRUE(graph_realization(named("MK33")));
    EXPECT_FALSE(graph_realization(named("F7")));
    EXPECT_FALSE(graph_realization(named("F7*")));
    EXPECT_FALSE(graph_realization(named("MK5*")));
    EXPECT_FALSE(graph_realization(named("MK33*")));
    EXPECT_TRUE(is_cographic(named("MK33*")));
    EXPECT_FALSE(is_cographic(named("MK33")));
    EXPECT_FALSE(graph_realization(named("R10")));
}

TEST(Recognition, RandomGraphsRealize) {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(rng, 3 + it % 7, 2 + it % 9);
        BinaryMatroid m = cycle_matroid(g);
        auto h = graph_realization(m);
        ASSERT_TRUE(h) << it;
        EXPECT_TRUE(cycle_matroid(*h).same_matroid(m));
        auto c = is_cographic(m.dual());
        ASSERT_TRUE(c);
    }
}

TEST(Recognition, Planarity) {
    EXPECT_FALSE(planar_embedding(complete_graph(5)));
    EXPECT_FALSE(planar_embedding(complete_bipartite(3, 3)));
    auto w = planar_embedding(wheel_graph(6));
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_embedding(wheel_graph(6), *w));
    EXPECT_TRUE(is_planar_graphic(named("K4")));
    EXPECT_FALSE(is_planar_graphic(named("MK33")));
}

TEST(Recognition, Ladders) {
    for (int n : {8, 10, 12}) {
        auto lt = mobius_ladder_type(mobius_ladder_graph(LadderKind::Cubic, n));
        ASSERT_TRUE(lt) << n;
        EXPECT_EQ(lt->kind, LadderKind::Cubic);
    }
    for (int n : {5, 7, 9}) {
        auto lt = mobius_ladder_type(mobius_ladder_graph(LadderKind::Quartic, n));
        if (n == 5) continue;  // K5: every edge lies in several 4-cycles
        ASSERT_TRUE(lt) << n;
        EXPECT_EQ(lt->kind, LadderKind::Quartic);
    }
    EXPECT_FALSE(mobius_ladder_type(wheel_graph(6)));
}

TEST(Recognition, MobiusMatroids) {
    for (int r = 3; r <= 8; ++r) {
        auto mm = recognize_mobius_matroid(mobius_triangular(r));
        ASSERT_TRUE(mm) << r;
        EXPECT_EQ(mm->kind, MobiusKind::Triangular);
        EXPECT_EQ(mm->rank, r);
    }
    for (int r : {4, 6, 8}) {
        auto mm = recognize_mobius_matroid(mobius_triadic(r));
        ASSERT_TRUE(mm) << r;
        EXPECT_EQ(mm->kind, MobiusKind::Triadic);
    }
    EXPECT_FALSE(recognize_mobius_matroid(named("R10")));
    EXPECT_FALSE(recognize_mobius_matroid(named("MK5")));
}

TEST(Recognition, ClassifyBasics) {
    Family k33{Kuratowski::K33};
    auto v = classify_i4c(named("MK33*"), k33);
    EXPECT_EQ(v.kind, VerdictKind::Cographic);
    EXPECT_TRUE(verify_verdict(named("MK33*"), v));
    auto w = classify_i4c(named("MK33"), k33);
    EXPECT_EQ(w.kind, VerdictKind::Outside);
    EXPECT_TRUE(verify_verdict(named("MK33"), w));
    auto d = classify_i4c(mobius_triangular(6), k33);
    EXPECT_EQ(d.kind, VerdictKind::TriangularMobius);
    EXPECT_TRUE(verify_verdict(mobius_triangular(6), d));
    Family all{Kuratowski::K33, Kuratowski::K5, Kuratowski::K33d, Kuratowski::K5d};
    auto f = classify_i4c(named("F7*"), all);
    EXPECT_TRUE(f.member());
    EXPECT_TRUE(verify_verdict(named("F7*"), f));
    auto dd = classify_i4c(named("MK33*"), Family{Kuratowski::K33d});
    EXPECT_EQ(dd.kind, VerdictKind::Outside);
    EXPECT_TRUE(verify_verdict(named("MK33*"), dd));
    auto pd = classify_i4c(named("MK33"), Family{Kuratowski::K33d});
    EXPECT_EQ(pd.kind, VerdictKind::Graphic);
    EXPECT_TRUE(verify_verdict(named("MK33"), pd));
}
