#pragma once

// Pass/fail tallies for exhaustive sweeps and a deterministic partitioned
// runner over the labeled graph stream.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lights_out/errors.hpp"
#include "lights_out/graph.hpp"

namespace lights_out {

struct Failure {
  std::string graph_id;
  std::string details;
};

struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::optional<Failure> first_failure;

  bool ok() const noexcept { return checked == passed; }

  /// `details` is only invoked for the first failure.
  template <class DetailsFn>
  void record(bool pass, const Graph& g, DetailsFn&& details) {
    ++checked;
    if (pass) {
      ++passed;
    } else if (!first_failure) {
      first_failure = Failure{graph_id(g), details()};
    }
  }
  void record(bool pass, const Graph& g) {
    record(pass, g, [] { return std::string{}; });
  }

  void merge(const CheckResult& other) {
    checked += other.checked;
    passed += other.passed;
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
  }
};

struct SweepReport {
  std::size_t max_n = 0;
  std::uint64_t graphs = 0;
  std::vector<CheckResult> checks;

  SweepReport() = default;
  explicit SweepReport(const std::vector<std::string>& names) {
    for (const auto& n : names) checks.push_back(CheckResult{n, 0, 0, std::nullopt});
  }

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
  }

  CheckResult& operator[](std::size_t i) { return checks.at(i); }
  const CheckResult& operator[](std::size_t i) const { return checks.at(i); }

  const CheckResult& find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return c;
    }
    throw InputError("no check named '" + name + "'");
  }

  /// Appends checks by name; used to combine reports from different sweeps.
  void append(const SweepReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    graphs = std::max(graphs, other.graphs);
    max_n = std::max(max_n, other.max_n);
  }

  /// Adds per-check tallies of a report over the same check list.
  void merge(const SweepReport& other) {
    graphs += other.graphs;
    for (std::size_t i = 0; i < checks.size(); ++i) checks[i].merge(other.checks.at(i));
  }
};

struct SweepOptions {
  unsigned threads = 1;
  std::uint64_t chunk = 4096;  ///< graphs per work unit
};

/// Runs `per_graph(graph, report)` over every labeled graph with
/// min_n <= n <= max_n. The stream is cut into index ranges that workers claim
/// in any order; partial reports are merged in range order, so the result
/// (including which failure is reported first) does not depend on scheduling.
template <class PerGraph>
SweepReport sweep_labeled_graphs(std::size_t min_n, std::size_t max_n, const std::vector<std::string>& names,
                                 PerGraph per_graph, SweepOptions options = {}) {
  struct Range {
    std::size_t n;
    std::uint64_t begin;
    std::uint64_t end;
  };
  std::vector<Range> ranges;
  for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n) {
    const LabeledGraphs graphs(n);
    for (std::uint64_t b = 0; b < graphs.size(); b += options.chunk) {
      ranges.push_back({n, b, std::min(graphs.size(), b + options.chunk)});
    }
  }
  std::vector<SweepReport> partial(ranges.size(), SweepReport(names));
  std::vector<std::exception_ptr> errors(ranges.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ranges.size(); i = next++) {
      try {
        const LabeledGraphs graphs(ranges[i].n);
        for (std::uint64_t k = ranges[i].begin; k < ranges[i].end; ++k) {
          per_graph(graphs.at(k), partial[i]);
          ++partial[i].graphs;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(ranges.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SweepReport total(names);
  total.max_n = max_n;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace lights_out
