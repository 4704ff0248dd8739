// SPDX-License-Identifier: Apache-2.0

#include "olg/graph.hpp"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "olg/error.hpp"
#include "olg/graph6.hpp"
#include "oracles.hpp"

namespace olg {
namespace {

// Triangle 0-1-2 with pendant vertex 3 on 2.
Graph triangle_with_pendant() { return {4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}}; }

int degree_sum(const Graph &g) {
  int s = 0;
  for (Vertex v = 0; v < g.order(); ++v) s += g.degree(v);
  return s;
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidParameter);
  EXPECT_THROW(Graph(-1, {}), InvalidParameter);
}

TEST(Graph, EdgesAreCanonical) {
  const Graph g(4, {{3, 1}, {2, 0}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.edge_index(3, 1), 2);
  EXPECT_EQ(g.edge_index(2, 3), -1);
  EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(Digraph, NeighbourhoodsAndAntiparallelArcs) {
  const Digraph d(3, {{0, 1}, {1, 0}, {0, 2}});
  EXPECT_EQ(std::vector<Vertex>(d.out_neighbors(0).begin(), d.out_neighbors(0).end()), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(std::vector<Vertex>(d.in_neighbors(0).begin(), d.in_neighbors(0).end()), (std::vector<Vertex>{1}));
  EXPECT_TRUE(d.has_arc(1, 0));
  EXPECT_FALSE(d.has_arc(2, 0));
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), InvalidParameter);
  EXPECT_THROW(Digraph(2, {{0, 0}}), InvalidParameter);
}

TEST(Generators, CompleteGraph) {
  EXPECT_EQ(complete_graph(1).size(), 0);
  const auto k4 = complete_graph(4);
  EXPECT_EQ(k4.order(), 4);
  EXPECT_EQ(k4.size(), 6);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(k4.degree(v), 3);
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_THROW(complete_graph(0), InvalidParameter);
}

TEST(Generators, HandshakeAndShape) {
  const int offsets[] = {1, 4};
  const std::vector<Graph> graphs{petersen_graph(),           hypercube_graph(3),   complete_bipartite_graph(3, 3),
                                  circulant_graph(8, offsets), cycle_graph(7),       path_graph(5),
                                  empty_graph(3),             triangle_with_pendant()};
  for (const auto &g : graphs) EXPECT_EQ(degree_sum(g), 2 * g.size());
  EXPECT_EQ(validate_regular_connected(petersen_graph()), (RegularParams{3, 10, 15}));
  EXPECT_EQ(validate_regular_connected(hypercube_graph(3)), (RegularParams{3, 8, 12}));
  EXPECT_EQ(validate_regular_connected(circulant_graph(8, offsets)), (RegularParams{3, 8, 12}));
  EXPECT_EQ(validate_regular_connected(complete_bipartite_graph(3, 3)), (RegularParams{3, 6, 9}));
}

TEST(Generators, PetersenIsKneser) {
  const auto g = petersen_graph();
  // Girth 5: no triangles and no 4-cycles, so adjacent vertices share no
  // neighbour and non-adjacent ones share exactly one.
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) {
      int common = 0;
      for (const Vertex w : g.neighbors(u)) common += g.adjacent(v, w);
      EXPECT_EQ(common, g.adjacent(u, v) ? 0 : 1);
    }
}

TEST(Validate, NamesTheViolatedHypothesis) {
  EXPECT_EQ(validate_regular_connected(complete_graph(4)), (RegularParams{3, 4, 6}));
  auto violated = [](const Graph &g) {
    try {
      validate_regular_connected(g);
    } catch (const HypothesisError &e) {
      return e.violated();
    }
    ADD_FAILURE() << "accepted";
    return Hypothesis::Orientation;
  };
  EXPECT_EQ(violated(triangle_with_pendant()), Hypothesis::Regular);
  const Graph two_k4(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  EXPECT_EQ(violated(two_k4), Hypothesis::Connected);
  EXPECT_EQ(violated(cycle_graph(5)), Hypothesis::DegreeAtLeast3);
}

TEST(AdjacencyMatrix, Examples) {
  IntMatrix k2(2, 2);
  k2 << 0, 1, 1, 0;
  EXPECT_EQ(adjacency_matrix(complete_graph(2)), k2);
  EXPECT_EQ(adjacency_matrix(empty_graph(3)), zero_matrix<BigInt>(3));
  IntMatrix k4 = IntMatrix::Constant(4, 4, BigInt(1));
  for (int i = 0; i < 4; ++i) k4(i, i) = 0;
  EXPECT_EQ(adjacency_matrix(complete_graph(4)), k4);
}

TEST(AdjacencyMatrix, SymmetricZeroDiagonal) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 10), rng);
    const auto a = adjacency_matrix(g);
    EXPECT_EQ(a, IntMatrix(a.transpose()));
    for (int k = 0; k < g.order(); ++k) EXPECT_EQ(a(k, k), 0);
    EXPECT_EQ(degree_sum(g), 2 * g.size());
  }
}

TEST(Graph6, HandEncodedExamples) {
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("C?"), empty_graph(4));
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6("C~\n"), complete_graph(4));
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(write_graph6(empty_graph(4)), "C?");
}

TEST(Graph6, ErrorsCarryOffsets) {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph6(text);
    } catch (const ParseError &e) {
      return e.offset();
    }
    ADD_FAILURE() << "accepted " << text;
    return 0;
  };
  EXPECT_EQ(offset_of("C~~"), 2U);    // too long
  EXPECT_EQ(offset_of("C"), 1U);      // too short
  EXPECT_EQ(offset_of("C\x7f"), 1U);  // byte outside 63..126
  EXPECT_EQ(offset_of("A`"), 1U);     // nonzero padding bits
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph6, ExhaustiveRoundTripSmall) {
  for (int n = 0; n <= 5; ++n)
    for (const auto &g : oracle::all_labeled_graphs(n)) EXPECT_EQ(parse_graph6(write_graph6(g)), g);
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_graph(static_cast<int>(rng() % 13), rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

TEST(Graph6, ExtendedOrder) {
  const auto g = cycle_graph(70);
  const auto text = write_graph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), g);
}

}  // namespace
}  // namespace olg
