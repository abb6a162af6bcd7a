#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qec/classify.hpp"
#include "qec/enumerate.hpp"

using namespace qec;

TEST(InducedPatterns, Examples) {
  const Graph claw = make_complete_bipartite(1, 3);
  const Graph diamond = make_two_clique(2, 3, 3);
  EXPECT_TRUE(has_induced(claw, Pattern::claw));
  EXPECT_FALSE(has_induced(claw, Pattern::diamond));
  EXPECT_TRUE(has_induced(diamond, Pattern::diamond));
  EXPECT_FALSE(has_induced(diamond, Pattern::claw));
  EXPECT_FALSE(has_induced(make_complete(6), Pattern::claw));
  EXPECT_FALSE(has_induced(make_complete(6), Pattern::diamond));
  EXPECT_FALSE(has_induced(make_path(3), Pattern::claw));
  EXPECT_FALSE(has_induced(make_star_product(3, {2, 2, 2}), Pattern::claw));
}

TEST(InducedPatterns, StarProductsAreClawAndDiamondFree) {
  for (std::size_t m = 2; m <= 8; ++m)
    for (std::size_t n = 2; n <= 8; ++n) {
      const Graph g = make_two_clique(1, m, n);
      EXPECT_FALSE(has_induced(g, Pattern::claw));
      EXPECT_FALSE(has_induced(g, Pattern::diamond));
    }
}

TEST(InducedPatterns, MatchBruteForceOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto &g : enumerate_connected_graphs(n)) {
      ASSERT_EQ(has_induced(g, Pattern::claw), oracle::brute_force_has_induced(g, oracle::claw_edges))
          << to_graph6(g);
      ASSERT_EQ(has_induced(g, Pattern::diamond),
                oracle::brute_force_has_induced(g, oracle::diamond_edges))
          << to_graph6(g);
    }
}

TEST(CactusCheck, Examples) {
  EXPECT_TRUE(cactus_check(make_path(6)).cactus_like());
  const auto diamond = cactus_check(make_two_clique(2, 3, 3));
  EXPECT_TRUE(diamond.tree);
  EXPECT_FALSE(diamond.pairwise_ok);
  EXPECT_FALSE(diamond.cactus_like());
  const auto c5 = cactus_check(make_cycle(5));
  EXPECT_FALSE(c5.tree);
  EXPECT_TRUE(c5.pairwise_ok);
  EXPECT_TRUE(c5.triple_ok);
  // Three edges at a common vertex: Γ is a triangle and the triple meets.
  const auto claw = cactus_check(make_complete_bipartite(1, 3));
  EXPECT_FALSE(claw.tree);
  EXPECT_FALSE(claw.triple_ok);
  EXPECT_TRUE(cactus_check(make_star_product(3, {2, 2, 2})).cactus_like());
}

TEST(RecogniseFamily, Shapes) {
  EXPECT_EQ(recognise_family(clique_graph(make_complete(4))).family, Family::complete);
  const auto two = recognise_family(clique_graph(make_two_clique(1, 3, 5)));
  EXPECT_EQ(two.family, Family::two_clique_star);
  ASSERT_TRUE(two.two_clique);
  EXPECT_EQ(two.two_clique->m, 5);
  EXPECT_EQ(two.two_clique->n, 3);
  EXPECT_EQ(two.two_clique->l, 1);
  const auto multi = recognise_family(clique_graph(make_star_product(4, {2, 3, 2})));
  EXPECT_EQ(multi.family, Family::star_product_multi);
  ASSERT_TRUE(multi.star_product);
  EXPECT_EQ(multi.star_product->hub, 4u);
  EXPECT_EQ(multi.star_product->parts, (std::vector<std::size_t>{3, 2, 2}));
  EXPECT_EQ(recognise_family(clique_graph(make_cycle(5))).family, Family::other);
  EXPECT_EQ(recognise_family(clique_graph(make_path(5))).family, Family::other);
}

TEST(ComputeQec, RoutesAndWitness) {
  const auto k = compute_qec(make_complete(5));
  EXPECT_EQ(k.method, QecMethod::closed_form_complete);
  EXPECT_DOUBLE_EQ(k.value, -1.0);
  const auto p = compute_qec(make_path(6));
  EXPECT_EQ(p.method, QecMethod::closed_form_path);
  EXPECT_NEAR(p.value, -1.0 / (1.0 + std::cos(M_PI / 6)), 1e-15);
  const auto t = compute_qec(make_two_clique(2, 4, 5));
  EXPECT_EQ(t.method, QecMethod::closed_form_two_clique);
  EXPECT_NEAR(t.value, qec_two_clique({2, 4, 5}), 1e-15);
  for (const auto &r : {k, p, t}) {
    double sum = 0.0;
    for (double x : r.witness)
      sum += x;
    EXPECT_NEAR(sum, 0.0, 1e-10);
    EXPECT_NEAR(dot(r.witness, r.witness), 1.0, 1e-10);
  }
  const auto c = compute_qec(make_cycle(6));
  EXPECT_EQ(c.method, QecMethod::numeric_eigen);
}

TEST(LadderPosition, Placement) {
  EXPECT_EQ(ladder_position(-1.0, 5), (LadderPosition{LadderKind::equals, 2}));
  EXPECT_EQ(ladder_position(-2.0 / 3.0, 5), (LadderPosition{LadderKind::equals, 3}));
  EXPECT_EQ(ladder_position(-0.6, 5), (LadderPosition{LadderKind::between, 3}));
  EXPECT_EQ(ladder_position(-0.54, 5), (LadderPosition{LadderKind::beyond_ladder, 5}));
  EXPECT_EQ(ladder_position(-0.54, 8).kind, LadderKind::between);
  EXPECT_EQ(ladder_position(-0.5, 5).kind, LadderKind::boundary);
  EXPECT_EQ(ladder_position(-0.5 + 5e-10, 5).kind, LadderKind::boundary);
  EXPECT_EQ(ladder_position(-0.4, 5).kind, LadderKind::at_least_half);
  EXPECT_EQ(ladder_position(-(2.0 - std::sqrt(2.0)) + 1e-12, 5),
            (LadderPosition{LadderKind::equals, 4}));
  EXPECT_THROW(ladder_position(-0.6, 2), std::invalid_argument);
}

TEST(LadderClassify, CompleteGraph) {
  const auto r = ladder_classify(make_complete(7));
  EXPECT_EQ(r.ladder_position, (LadderPosition{LadderKind::equals, 2}));
  EXPECT_EQ(r.family, Family::complete);
  EXPECT_EQ(r.ladder_family, LadderFamily::complete);
  EXPECT_TRUE(r.below_half);
  EXPECT_TRUE(r.consistent());
}

TEST(LadderClassify, StarPairBetweenP3AndP4) {
  const auto r = ladder_classify(make_two_clique(1, 5, 2));
  EXPECT_EQ(r.ladder_position, (LadderPosition{LadderKind::between, 3}));
  EXPECT_EQ(r.ladder_family, LadderFamily::star_pair_p3_p4);
  EXPECT_EQ(r.method, QecMethod::closed_form_two_clique);
}

TEST(LadderClassify, MultiStarBetweenP4AndP5) {
  const auto r = ladder_classify(make_star_product(2, {3, 2}));
  EXPECT_NEAR(r.qec, -2.0 * (6.0 - std::sqrt(21.0)) / 5.0, 1e-10);
  EXPECT_EQ(r.ladder_position, (LadderPosition{LadderKind::between, 4}));
  EXPECT_EQ(r.family, Family::star_product_multi);
  EXPECT_EQ(r.ladder_family, LadderFamily::multi_open);
  EXPECT_TRUE(r.gamma_is_tree);
  EXPECT_FALSE(r.has_claw);
}

TEST(LadderClassify, MultiStarOfEdgesAtP4) {
  const auto r = ladder_classify(make_star_product(3, {2, 2}));
  EXPECT_EQ(r.ladder_position, (LadderPosition{LadderKind::equals, 4}));
  EXPECT_EQ(r.ladder_family, LadderFamily::p4_level_multi);
  EXPECT_EQ(ladder_classify(make_two_clique(1, 4, 3)).ladder_family, LadderFamily::p4_level_pair);
}

TEST(LadderClassify, ClawAndDiamondSitAtHalf) {
  for (const Graph &g : {make_complete_bipartite(1, 3), make_two_clique(2, 3, 3)}) {
    const auto r = ladder_classify(g);
    EXPECT_EQ(r.ladder_position.kind, LadderKind::boundary);
    EXPECT_FALSE(r.below_half);
    EXPECT_TRUE(r.consistent());
  }
}

TEST(LadderClassify, Rejections) {
  EXPECT_THROW(ladder_classify(Graph(1)), std::invalid_argument);
  EXPECT_THROW(ladder_classify(make_path(4), 2), std::invalid_argument);
  EXPECT_THROW(ladder_classify(Graph(3, {{0, 1}})), disconnected_graph_error);
}

TEST(LadderClassify, ConsistentOnAllSmallGraphs) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto &g : enumerate_connected_graphs(n)) {
      const auto r = ladder_classify(g);
      ASSERT_TRUE(r.consistent()) << to_graph6(g);
      ASSERT_NEAR(r.qec, oracle::projected_qec(g), 1e-8) << to_graph6(g);
    }
}
