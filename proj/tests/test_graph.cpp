#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "lights_out/errors.hpp"
#include "lights_out/graph.hpp"

using namespace lights_out;

namespace {

std::string edge_text(const Graph& g) {
  std::string s;
  for (const auto& e : g.edges()) s += e.to_string();
  return s;
}

}  // namespace

TEST(Graph, FromEdgesValidates) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 5}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
  const auto g = Graph::from_edges(3, {{1, 0}});
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, ClosedNeighborhoodMatrix) {
  EXPECT_EQ(closed_neighborhood_matrix(complete_graph(2)).to_string(), "11\n11");
  EXPECT_EQ(closed_neighborhood_matrix(Graph(1)).to_string(), "1");
  EXPECT_EQ(closed_neighborhood_matrix(path_graph(3)).to_string(), "110\n111\n011");
  EXPECT_TRUE(closed_neighborhood_matrix(cycle_graph(7)).is_symmetric());
}

TEST(Graph, ToggleEdge) {
  EXPECT_EQ(toggle_edge(complete_graph(2), 0, 1), Graph(2));
  EXPECT_EQ(toggle_edge(Graph(2), 1, 0), complete_graph(2));
  EXPECT_THROW(toggle_edge(Graph(2), 0, 0), InputError);
  EXPECT_THROW(toggle_edge(Graph(2), 0, 2), InputError);
}

TEST(StarOperation, SinglePairToggles) {
  EXPECT_EQ(star_operation(Graph(2), {{0}, {1}}), complete_graph(2));
}

TEST(StarOperation, P3) {
  const auto g = star_operation(path_graph(3), {{0}, {1, 2}});
  EXPECT_EQ(edge_text(g), "(0,2)(1,2)");
}

TEST(StarOperation, Validation) {
  EXPECT_THROW(star_operation(path_graph(3), {{0}, {0, 1}}), InputError);
  EXPECT_THROW(star_operation(path_graph(3), {{0}, {3}}), InputError);
  EXPECT_THROW(star_operation(path_graph(3), {{0, 0}, {1}}), InputError);
}

TEST(StarOperation, MatchesMatrixIdentity) {
  // N(G*) = N(G) + x_A1 x_A2^T + x_A2 x_A1^T for every disjoint pair on P4.
  const auto g = path_graph(4);
  for (unsigned a1 = 1; a1 < 16; ++a1) {
    for (unsigned a2 = 1; a2 < 16; ++a2) {
      if (a1 & a2) continue;
      const auto x1 = BitVector::from_mask(4, a1);
      const auto x2 = BitVector::from_mask(4, a2);
      const auto star = star_operation(g, {x1.support(), x2.support()});
      const auto n = closed_neighborhood_matrix(g);
      const auto ns = closed_neighborhood_matrix(star);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          const bool j_term = (x1.test(i) && x2.test(j)) || (x2.test(i) && x1.test(j));
          EXPECT_EQ(ns.test(i, j), n.test(i, j) != j_term);
        }
      }
    }
  }
}

TEST(Generators, NamedFamilies) {
  EXPECT_EQ(edge_text(cycle_graph(5)), "(0,1)(0,4)(1,2)(2,3)(3,4)");
  EXPECT_EQ(edge_text(complete_graph(3)), "(0,1)(0,2)(1,2)");
}

TEST(Generators, GridTwoByTwoIsFourCycle) {
  // Row-major labels: the cycle is 0-1-3-2.
  const auto g = grid_graph(2, 2);
  EXPECT_EQ(edge_text(g), "(0,1)(0,2)(1,3)(2,3)");
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(Generators, ParseNamed) {
  EXPECT_EQ(generate_named("cycle:5"), cycle_graph(5));
  EXPECT_EQ(generate_named("union:complete:2+complete:2"), Graph::from_edges(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(generate_named("grid:2x3"), grid_graph(2, 3));
  EXPECT_THROW(generate_named("cycle:2"), InputError);
  EXPECT_THROW(generate_named("wheel:5"), InputError);
  EXPECT_THROW(generate_named("path"), InputError);
}

TEST(LabeledGraphs, Counts) {
  EXPECT_EQ(LabeledGraphs(1).size(), 1u);
  EXPECT_EQ(LabeledGraphs(3).size(), 8u);
  EXPECT_EQ(LabeledGraphs(4).size(), 64u);
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= 6; ++n) total += LabeledGraphs(n).size();
  EXPECT_EQ(total, 33867u);
  EXPECT_THROW(LabeledGraphs(0), InputError);
  EXPECT_THROW(LabeledGraphs(13), CapacityError);
}

TEST(LabeledGraphs, DistinctAndIndexRoundTrips) {
  std::set<std::string> seen;
  const LabeledGraphs graphs(4);
  std::uint64_t k = 0;
  for (const auto& g : graphs) {
    EXPECT_EQ(labeled_graph_index(g), k);
    EXPECT_EQ(graph_id(g), "4:" + std::to_string(k));
    seen.insert(edge_text(g));
    ++k;
  }
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_EQ(graphs.at(0), Graph(4));
  EXPECT_EQ(graphs.at(63), complete_graph(4));
}

TEST(Graph, EvenGraphs) {
  EXPECT_TRUE(cycle_graph(5).is_even());
  EXPECT_FALSE(path_graph(3).is_even());
  EXPECT_TRUE(Graph(3).is_even());
}
