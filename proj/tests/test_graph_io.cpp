#include <gtest/gtest.h>

#include <random>
#include <string>

#include "lights_out/errors.hpp"
#include "lights_out/graph.hpp"
#include "lights_out/graph_io.hpp"
#include "support/reference.hpp"

using namespace lights_out;

TEST(GraphJson, ParsesK2) {
  EXPECT_EQ(parse_graph(R"({"n":2,"edges":[[0,1]]})"), complete_graph(2));
  EXPECT_EQ(parse_graph(R"({"n":3})"), Graph(3));
}

TEST(GraphJson, ReversedPairsAreNormalized) {
  EXPECT_EQ(parse_graph(R"({"n":2,"edges":[[1,0]]})"), complete_graph(2));
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(parse_graph(R"({"n":2,"edges":[[0,0]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":3,"edges":[[0,5]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":3,"edges":[[0,1],[1,0]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":0,"edges":[]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":"3"})"), InputError);
  EXPECT_THROW(parse_graph(R"({"edges":[]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":3,"edges":[[0]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":3,"edges":{}})"), InputError);
  EXPECT_THROW(parse_graph(R"([1,2])"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":3,)"), InputError);
  EXPECT_THROW(parse_graph(R"({"n":1000000})"), CapacityError);
}

TEST(GraphJson, ErrorMessagesNameTheOffendingEdge) {
  try {
    parse_graph(R"({"n":3,"edges":[[0,1],[2,2]]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("edges[1]"), std::string::npos) << e.what();
  }
}

TEST(GraphJson, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = ref::random_graph(rng, 1 + rng() % 12, 0.4);
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  }
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(parse_graph6("Bg"), path_graph(3));
  EXPECT_EQ(parse_graph6("C~\n"), complete_graph(4));
}

TEST(Graph6, Petersen) {
  const auto g = parse_graph6("IheA@GUAo");
  EXPECT_EQ(g.vertex_count(), 10u);
  EXPECT_EQ(g.edge_count(), 15u);
  for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_EQ(to_graph6(g), "IheA@GUAo");
}

TEST(Graph6, RoundTripIncludingLongOrderField) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = ref::random_graph(rng, 1 + rng() % 20, 0.3);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
  const auto big = ref::random_graph(rng, 70, 0.05);
  const auto text = to_graph6(big);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), big);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), InputError);
  EXPECT_THROW(parse_graph6(">>graph6<<Bg"), InputError);
  EXPECT_THROW(parse_graph6("B"), InputError);
  EXPECT_THROW(parse_graph6("Bgg"), InputError);
  EXPECT_THROW(parse_graph6("Bh"), InputError);  // padding bit set
  EXPECT_THROW(parse_graph6("?"), InputError);   // order 0
  EXPECT_THROW(parse_graph6("B\x01"), InputError);
}

TEST(Graph6, Lines) {
  const auto gs = parse_graph6_lines("A_\n\nBg\r\nC~\n");
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[2], complete_graph(4));
  EXPECT_THROW(parse_graph6_lines("A_\nB\n"), InputError);
}

TEST(AutoFormat, JsonOrGraph6) {
  EXPECT_EQ(parse_graph_auto("  {\"n\":2,\"edges\":[[0,1]]}"), complete_graph(2));
  EXPECT_EQ(parse_graph_auto("Bg\nC~\n"), path_graph(3));
  EXPECT_THROW(parse_graph_auto("\n\n"), InputError);
}
