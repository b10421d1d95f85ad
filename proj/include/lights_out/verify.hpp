#pragma once

// Exhaustive verification sweeps over labeled graphs: the prediction table,
// the existence theorems, the characterization, and fast-path vs oracle
// equivalence.

#include <cstddef>
#include <string>
#include <vector>

#include "lights_out/analysis.hpp"
#include "lights_out/edgecalc.hpp"
#include "lights_out/errors.hpp"
#include "lights_out/graph.hpp"
#include "lights_out/oracle.hpp"
#include "lights_out/report.hpp"

namespace lights_out {

inline void require_sweep_order(std::size_t max_n, std::size_t limit, const char* what) {
  if (max_n < 1) throw InputError(std::string(what) + ": max_n must be at least 1");
  if (max_n > limit) {
    throw CapacityError(std::string(what) + ": max_n " + std::to_string(max_n) + " exceeds " + std::to_string(limit));
  }
}

/// Odd dominating pattern exists, and multiplying it back gives all ones.
inline SweepReport sutner_sweep(std::size_t max_n, SweepOptions options = {}) {
  require_sweep_order(max_n, 7, "sutner_sweep");
  return sweep_labeled_graphs(
      1, max_n, {"odd_dominating_fast"},
      [](const Graph& g, SweepReport& r) {
        bool ok = false;
        try {
          const auto s = odd_dominating_patterns(g);
          ok = closed_neighborhood_matrix(g) * s.particular == BitVector::ones(g.vertex_count());
        } catch (const Error&) {
          ok = false;
        }
        r[0].record(ok, g);
      },
      options);
}

/// Table soundness for every ordered pair of disjoint non-empty sets.
inline void check_star_table(const Graph& g, SweepReport& r) {
  const std::size_t n = g.vertex_count();
  const LightsOut system(g);
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t a1 = 1; a1 <= all; ++a1) {
    const std::uint32_t rest = all ^ a1;
    for (std::uint32_t a2 = rest; a2 != 0; a2 = (a2 - 1) & rest) {
      const StarSpec spec{BitVector::from_mask(n, a1).support(), BitVector::from_mask(n, a2).support()};
      const auto report = analyze_star(system, spec);
      r[0].record(report.agrees, g, [&] {
        return "A1=" + BitVector::from_mask(n, a1).to_string() + " A2=" + BitVector::from_mask(n, a2).to_string() +
               " predicted " + std::to_string(report.predicted.delta_nu) + " actual " +
               std::to_string(report.actual_delta_nu);
      });
    }
  }
}

inline SweepReport star_table_sweep(std::size_t max_n, SweepOptions options = {}) {
  require_sweep_order(max_n, 6, "star_table_sweep");
  return sweep_labeled_graphs(1, max_n, {"star_table_agreement"}, check_star_table, options);
}

namespace theorems {
enum Check : std::size_t {
  kRemoval,
  kAddition,
  kMinus2,
  kDegreeParity,
  kCharacterization,
  kSufficiency,
  kParityLemma,
  kCountingBridge,
};
}  // namespace theorems

inline const std::vector<std::string>& theorem_check_names() {
  static const std::vector<std::string> names{
      "removal_theorem",   "addition_theorem",          "minus2_theorem", "degree_parity_theorem",
      "characterization",  "characterization_sufficiency", "parity_lemma_fast", "counting_bridge"};
  return names;
}

inline void check_theorems(const Graph& g, SweepReport& r, Type6Reading reading = Type6Reading::Amended) {
  using namespace theorems;
  const LightsOut system(g);
  const std::size_t nu = system.nullity();
  const std::size_t n = g.vertex_count();
  const bool has_edges = g.edge_count() > 0;

  if (nu > 0 && has_edges) {
    bool ok = false;
    try {
      const auto w = find_nullity_decreasing_edge(g);
      ok = w.nullity_after < nu && g.has_edge(w.edge.u, w.edge.v) &&
           nullity(g.with_edge_toggled(w.edge.u, w.edge.v)) == w.nullity_after;
    } catch (const NoWitnessError&) {
    }
    r[kRemoval].record(ok, g);
  }

  if (nu == 0 && !(g.is_even() && n % 2 == 1)) {
    const auto w = find_nullity_increasing_addition(g);
    r[kAddition].record(w.has_value() && nullity(g.with_edge_toggled(w->edge.u, w->edge.v)) > 0, g);
  }

  if (nu >= 2) {
    bool ok = false;
    try {
      const auto e = find_delta_minus2_edit(g);
      ok = (e.action == EditAction::Remove) == g.has_edge(e.edge.u, e.edge.v) &&
           nullity(g.with_edge_toggled(e.edge.u, e.edge.v)) + 2 == nu;
    } catch (const NoWitnessError&) {
    }
    r[kMinus2].record(ok, g);
  }

  if (nu == 0) {
    const auto outcome = check_degree_parity(g);
    if (outcome != DegreeParityOutcome::HypothesisFailed) {
      r[kDegreeParity].record(outcome == DegreeParityOutcome::Verified, g);
    }

    if (has_edges) {
      bool ok = false;
      std::string why;
      try {
        const auto w = verify_characterization(g, reading);
        ok = replay_characterization(g, w, reading);
        if (!ok) why = "witness failed replay";
      } catch (const NoWitnessError& e) {
        why = e.what();
      }
      r[kCharacterization].record(ok, g, [&] { return why; });
    }

    // Type 1/2 keeps nullity 0; Type 3/4 then Type 5/6 goes 0 -> 1 -> 0.
    for (const auto& e : g.non_edges()) {
      const auto t = classify_edge_addition(system, e.u, e.v, reading).tag;
      if (is_type_1_or_2(t)) {
        r[kSufficiency].record(nullity(g.with_edge_toggled(e.u, e.v)) == 0, g,
                               [&] { return std::string(to_string(t)) + " at " + e.to_string(); });
      } else if (is_type_3_or_4(t)) {
        const LightsOut middle(g.with_edge_toggled(e.u, e.v));
        r[kSufficiency].record(middle.nullity() == 1, g,
                               [&] { return std::string(to_string(t)) + " at " + e.to_string(); });
        for (const auto& f : middle.graph().non_edges()) {
          const auto t2 = classify_edge_addition(middle, f.u, f.v, reading).tag;
          if (!is_type_5_or_6(t2)) continue;
          r[kSufficiency].record(nullity(middle.graph().with_edge_toggled(f.u, f.v)) == 0, g, [&] {
            return std::string(to_string(t)) + " at " + e.to_string() + " then " + std::string(to_string(t2)) +
                   " at " + f.to_string();
          });
        }
      }
    }

    for (std::size_t u = 0; u < n; ++u) {
      r[kParityLemma].record(check_parity_lemma(system, u), g, [&] { return "vertex " + std::to_string(u); });
    }
  }

  // Union class of two HO vertices vs the oracle's pattern counts (c = 1).
  if (nu > 0) {
    const auto ones = BitVector::ones(n);
    for (std::size_t u = 0; u < n; ++u) {
      if (system.vertex_class(u) != ActivationTag::HO) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (system.vertex_class(v) != ActivationTag::HO) continue;
        const auto [classes, aux] = star_inputs(system, BitVector::unit(n, u), BitVector::unit(n, v));
        const auto counts = oracle::partition_counts(g, ones, {u}, {v});
        bool ok = aux.union_tag.has_value() && counts.o1_o2 == counts.i1_i2;
        if (ok) {
          switch (*aux.union_tag) {
            case ActivationTag::HO: ok = 4 * counts.o1_o2 == counts.total; break;
            case ActivationTag::AO: ok = counts.o1_o2 == 0; break;
            case ActivationTag::NO: ok = 2 * counts.o1_o2 == counts.total; break;
          }
        }
        r[kCountingBridge].record(ok, g, [&] { return "vertices " + std::to_string(u) + "," + std::to_string(v); });
      }
    }
  }
}

inline SweepReport theorem_sweep(std::size_t max_n, SweepOptions options = {},
                                 Type6Reading reading = Type6Reading::Amended) {
  require_sweep_order(max_n, 7, "theorem_sweep");
  return sweep_labeled_graphs(
      1, max_n, theorem_check_names(), [reading](const Graph& g, SweepReport& r) { check_theorems(g, r, reading); },
      options);
}

/// Public oracle functions against the elimination path.
inline SweepReport oracle_equivalence_sweep(std::size_t kernel_max_n, std::size_t classify_max_n,
                                            SweepOptions options = {}) {
  require_sweep_order(kernel_max_n, 8, "oracle_equivalence_sweep");
  return sweep_labeled_graphs(
      1, std::max(kernel_max_n, classify_max_n), {"kernel_equality", "classify_agreement", "solution_count"},
      [=](const Graph& g, SweepReport& r) {
        const std::size_t n = g.vertex_count();
        const LightsOut system(g);
        if (n <= kernel_max_n) {
          std::vector<BitVector> span;
          const auto& basis = system.null_basis();
          for (const auto& v : enumerate_solutions(AffineSolutionSet{BitVector(n), basis})) span.push_back(v);
          std::sort(span.begin(), span.end());
          r[0].record(span == oracle::brute_kernel(g), g);

          for (std::uint32_t c = 0; c < (std::uint32_t{1} << n); ++c) {
            const auto cv = BitVector::from_mask(n, c);
            const auto set = system.solve(cv);
            if (!set) continue;
            r[2].record(enumerate_solutions(*set).size() == (std::size_t{1} << system.nullity()) &&
                            oracle::brute_solutions(g, cv).size() == (std::size_t{1} << system.nullity()),
                        g, [&] { return "configuration " + cv.to_string(); });
          }
        }
        if (n <= classify_max_n) {
          for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u; v < n; ++v) {
              std::vector<std::size_t> set{u};
              if (v != u) set.push_back(v);
              const auto x = BitVector::characteristic(n, set);
              for (const auto& c : {BitVector::ones(n), x}) {
                if (!system.is_solvable(c)) continue;
                r[1].record(system.classify(x, c).tag == oracle::brute_classify_set(g, set, c).tag, g,
                            [&] { return "set " + x.to_string() + " relative to " + c.to_string(); });
              }
            }
          }
        }
      },
      options);
}

/// Everything the `verify` command runs.
inline SweepReport full_verification(std::size_t max_n, SweepOptions options = {},
                                     Type6Reading reading = Type6Reading::Amended) {
  require_sweep_order(max_n, oracle::max_suite_order, "verify");
  SweepReport all = oracle::verify_lemma_suite(max_n, options);
  all.append(sutner_sweep(max_n, options));
  all.append(star_table_sweep(max_n, options));
  all.append(theorem_sweep(max_n, options, reading));
  return all;
}

}  // namespace lights_out
