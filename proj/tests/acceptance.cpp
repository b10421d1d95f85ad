// Acceptance gate. One PASS/FAIL line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "lights_out/analysis.hpp"
#include "lights_out/graph.hpp"
#include "lights_out/oracle.hpp"
#include "lights_out/verify.hpp"

using namespace lights_out;

namespace {

using Clock = std::chrono::steady_clock;

SweepOptions sweep_options() {
  const unsigned hw = std::thread::hardware_concurrency();
  return {hw == 0 ? 1u : hw, 4096};
}

struct Verdict {
  bool pass;
  std::string detail;
};

std::string describe(const SweepReport& r) {
  std::string out = std::to_string(r.graphs) + " graphs";
  for (const auto& c : r.checks) {
    out += "; " + c.name + " " + std::to_string(c.passed) + "/" + std::to_string(c.checked);
    if (c.first_failure) out += " first failure " + c.first_failure->graph_id + " " + c.first_failure->details;
  }
  return out;
}

bool every_check_exercised(const SweepReport& r) {
  for (const auto& c : r.checks) {
    if (!c.ok() || c.checked == 0) return false;
  }
  return true;
}

int failures = 0;

void criterion(const char* name, double limit_seconds, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = elapsed < limit_seconds;
  const bool pass = v.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %s (%.2fs, limit %.0fs%s) %s\n", pass ? "PASS" : "FAIL", name, elapsed, limit_seconds,
              in_time ? "" : ", over time", v.detail.c_str());
  std::fflush(stdout);
}

Verdict two_k2() {
  const auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  bool ok = nullity(g) == 2;
  std::string detail = "nu=" + std::to_string(nullity(g)) + " removals:";
  for (const auto& e : g.edges()) {
    const auto after = nullity(g.with_edge_toggled(e.u, e.v));
    ok = ok && after == 1;
    detail += " " + std::to_string(after);
  }
  detail += " additions:";
  for (const auto& e : g.non_edges()) {
    const auto after = nullity(g.with_edge_toggled(e.u, e.v));
    ok = ok && after == 0;
    detail += " " + std::to_string(after);
  }
  return {ok && g.edges().size() == 2 && g.non_edges().size() == 4, detail};
}

Verdict c5_and_empty3() {
  const auto c5 = cycle_graph(5);
  bool ok = nullity(c5) == 0 && c5.non_edges().size() == 5;
  std::string detail = "C5 chords:";
  for (const auto& e : c5.non_edges()) {
    const auto after = nullity(c5.with_edge_toggled(e.u, e.v));
    ok = ok && after == 0;
    detail += " " + std::to_string(after);
  }
  const auto e3 = empty_graph(3);
  ok = ok && nullity(e3) == 0 && e3.non_edges().size() == 3;
  detail += "; empty3 additions:";
  for (const auto& e : e3.non_edges()) {
    const auto after = nullity(e3.with_edge_toggled(e.u, e.v));
    ok = ok && after == 1;
    detail += " " + std::to_string(after);
  }
  return {ok, detail};
}

Verdict odd_dominating_existence() {
  // 2^0 + 2^1 + 2^3 + 2^6 + 2^10 + 2^15 labeled graphs on 1..6 vertices.
  constexpr std::uint64_t expected_graphs = 33'867;
  const auto r = sutner_sweep(6, sweep_options());
  const bool ok = r.all_passed() && r.graphs == expected_graphs && r[0].checked == expected_graphs;
  return {ok, describe(r)};
}

Verdict star_table() {
  const auto r = star_table_sweep(5, sweep_options());
  return {every_check_exercised(r), describe(r)};
}

Verdict all_theorems() {
  const auto r = theorem_sweep(6, sweep_options());
  return {every_check_exercised(r), describe(r)};
}

Verdict oracle_equivalence() {
  const auto r = oracle_equivalence_sweep(5, 4, sweep_options());
  return {every_check_exercised(r), describe(r)};
}

Verdict lemma_suite() {
  const auto suite = oracle::verify_lemma_suite(5, sweep_options());
  const auto parity = oracle::parity_lemma_sweep(6, sweep_options());
  return {every_check_exercised(suite) && every_check_exercised(parity),
          describe(suite) + " | order 6: " + describe(parity)};
}

}  // namespace

int main() {
  std::printf("acceptance: %u worker thread(s)\n", sweep_options().threads);
  criterion("two_k2_edge_edits", 1, two_k2);
  criterion("c5_chords_and_empty3_additions", 1, c5_and_empty3);
  criterion("odd_dominating_existence_n_le_6", 60, odd_dominating_existence);
  criterion("star_table_exhaustive_n_le_5", 300, star_table);
  criterion("theorem_sweeps_n_le_6", 600, all_theorems);
  criterion("oracle_equivalence", 120, oracle_equivalence);
  criterion("lemma_suite_n_le_5_parity_n_le_6", 600, lemma_suite);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
