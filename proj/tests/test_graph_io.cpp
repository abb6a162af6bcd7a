#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qec/graph_io.hpp"

using namespace qec;

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(make_complete(3)), "Bw");
  EXPECT_EQ(to_graph6(make_path(4)), "Ch");
  EXPECT_EQ(to_graph6(make_cycle(5)), "Dhc");
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(to_graph6(petersen), "IheA@GUAo");
  EXPECT_EQ(from_graph6("IheA@GUAo"), petersen);
}

TEST(Graph6, LongFormHeader) {
  const std::string s = to_graph6(make_path(63));
  EXPECT_EQ(s.substr(0, 4), "~??~");
  EXPECT_EQ(from_graph6(s), make_path(63));
  EXPECT_EQ(from_graph6(to_graph6(make_complete(64))), make_complete(64));
}

TEST(Graph6, HeaderAndTrailingNewlineAccepted) {
  EXPECT_EQ(from_graph6(">>graph6<<Ch\n"), make_path(4));
  EXPECT_EQ(from_graph6("Bw\r\n"), make_complete(3));
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(from_graph6(""), parse_error);
  EXPECT_THROW(from_graph6("?"), parse_error);       // n = 0
  EXPECT_THROW(from_graph6("C"), parse_error);       // missing data byte
  EXPECT_THROW(from_graph6("Chh"), parse_error);     // extra data byte
  EXPECT_THROW(from_graph6("Bx"), parse_error);      // nonzero padding
  EXPECT_THROW(from_graph6("C\x20"), parse_error);   // byte below 63
  EXPECT_THROW(from_graph6("~??\x7f"), parse_error); // byte above 126
}

TEST(Graph6, RandomRoundTripIsByteExact) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 62;
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::vector<edge> es;
    for (vertex u = 0; u < n; ++u)
      for (vertex v = u + 1; v < n; ++v)
        if (std::bernoulli_distribution(p)(rng))
          es.emplace_back(u, v);
    const Graph g(n, es);
    const std::string s = to_graph6(g);
    const Graph back = from_graph6(s);
    ASSERT_EQ(back, g);
    ASSERT_EQ(to_graph6(back), s);
  }
}

TEST(Graph6, Stream) {
  std::istringstream in("Bw\n\nCh\nDhc\n");
  const auto gs = read_graph6_stream(in);
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[2], make_cycle(5));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = make_two_clique(1, 3, 3);
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text.substr(0, 2), "5\n");
  EXPECT_EQ(from_edge_list(text), g);
}

TEST(EdgeList, Parse) {
  EXPECT_EQ(from_edge_list("4\n0 1\n1 2\n\n2 3\n"), make_path(4));
  EXPECT_EQ(from_edge_list("1\n"), Graph(1));
}

TEST(EdgeList, Malformed) {
  EXPECT_THROW(from_edge_list(""), parse_error);
  EXPECT_THROW(from_edge_list("x\n"), parse_error);
  EXPECT_THROW(from_edge_list("0\n"), parse_error);
  EXPECT_THROW(from_edge_list("3\n0 3\n"), parse_error);
  EXPECT_THROW(from_edge_list("3\n1 1\n"), parse_error);
  EXPECT_THROW(from_edge_list("3\n0 1 2\n"), parse_error);
  EXPECT_THROW(from_edge_list("3\n0\n"), parse_error);
}
