#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "lights_out/errors.hpp"
#include "lights_out/graph.hpp"
#include "lights_out/oracle.hpp"
#include "support/reference.hpp"

using namespace lights_out;
using namespace lights_out::oracle;

namespace {

Graph k2_k2() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }

std::vector<std::string> texts(const std::vector<BitVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST(BruteKernel, Examples) {
  EXPECT_EQ(texts(brute_kernel(complete_graph(2))), (std::vector<std::string>{"00", "11"}));
  EXPECT_EQ(texts(brute_kernel(Graph(1))), std::vector<std::string>{"0"});
  EXPECT_EQ(texts(brute_kernel(complete_graph(3))), (std::vector<std::string>{"000", "011", "101", "110"}));
}

TEST(BruteKernel, MatchesReferenceSolutionsOfZero) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = ref::random_graph(rng, 1 + rng() % 9, 0.5);
    auto expected = ref::solutions(g, std::string(g.vertex_count(), '0'));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(texts(brute_kernel(g)), expected);
  }
}

TEST(BruteClassify, Examples) {
  EXPECT_EQ(brute_classify_set(complete_graph(2), {0}).tag, ActivationTag::HO);
  EXPECT_EQ(brute_classify_set(cycle_graph(5), {0}).tag, ActivationTag::AO);
  EXPECT_EQ(brute_classify_set(path_graph(3), {0}).tag, ActivationTag::NO);
  EXPECT_THROW(brute_classify_set(complete_graph(2), {0}, BitVector::from_string("10")), InputError);
}

TEST(PartitionCounts, Examples) {
  const auto ones4 = BitVector::ones(4);
  const auto two_k2 = partition_counts(k2_k2(), ones4, {0}, {2});
  EXPECT_EQ(two_k2.total, 4u);
  EXPECT_EQ(two_k2.o1_o2, 1u);
  EXPECT_EQ(two_k2.i1_i2, 1u);
  const auto k2 = partition_counts(complete_graph(2), BitVector::ones(2), {0}, {1});
  EXPECT_EQ(k2.total, 2u);
  EXPECT_EQ(k2.o1_o2, 0u);
  EXPECT_THROW(partition_counts(cycle_graph(5), BitVector::ones(5), {0}, {1}), InputError);
  EXPECT_THROW(partition_counts(k2_k2(), ones4, {0}, {0}), InputError);
}

TEST(Guards, OrderLimits) {
  EXPECT_THROW(brute_kernel(Graph(23)), CapacityError);
  EXPECT_THROW(verify_lemma_suite(7), CapacityError);
  EXPECT_THROW(verify_lemma_suite(0), InputError);
  EXPECT_THROW(brute_solutions(complete_graph(2), BitVector::from_string("00"), 1), CapacityError);
}

TEST(LemmaSuite, UpToThree) {
  const auto r = verify_lemma_suite(3);
  EXPECT_EQ(r.graphs, 11u);
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.ok()) << c.name << ": " << (c.first_failure ? c.first_failure->graph_id : "");
  }
}

TEST(LemmaSuite, UpToFourEveryCheckExercised) {
  const auto r = verify_lemma_suite(4, {2, 16});
  EXPECT_EQ(r.graphs, 75u);
  EXPECT_TRUE(r.all_passed());
  for (const auto& c : r.checks) EXPECT_GT(c.checked, 0u) << c.name;
}

TEST(LemmaSuite, DeterministicAcrossThreadCounts) {
  const auto a = verify_lemma_suite(4, {1, 7});
  const auto b = verify_lemma_suite(4, {4, 3});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].checked, b.checks[i].checked);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
  }
}

// A deliberately wrong claim must be caught and reported with its graph.
TEST(SweepReport, RecordsFirstFailure) {
  const auto r = sweep_labeled_graphs(1, 3, {"nullity_is_zero"},
                                      [](const Graph& g, SweepReport& rep) {
                                        rep[0].record(brute_kernel(g).size() == 1, g, [] { return "kernel"; });
                                      },
                                      {3, 2});
  EXPECT_FALSE(r.all_passed());
  ASSERT_TRUE(r[0].first_failure);
  EXPECT_EQ(r[0].first_failure->graph_id, "2:1");
  EXPECT_EQ(r[0].first_failure->details, "kernel");
}

TEST(SweepReport, WorkerExceptionsPropagate) {
  EXPECT_THROW(sweep_labeled_graphs(1, 3, {"x"}, [](const Graph&, SweepReport&) { throw InternalError("boom"); },
                                    {2, 1}),
               InternalError);
}
