#pragma once

// Brute-force re-derivations by exhaustive enumeration of patterns.
//
// Nothing here touches RowReduction: patterns are n-bit masks and N p is
// accumulated column by column. The fast path is only consulted by the
// comparison checks of the lemma suite, never to produce an oracle answer.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lights_out/analysis.hpp"
#include "lights_out/errors.hpp"
#include "lights_out/gf2.hpp"
#include "lights_out/graph.hpp"
#include "lights_out/report.hpp"

namespace lights_out::oracle {

inline constexpr std::size_t max_brute_order = 22;
inline constexpr std::size_t max_suite_order = 6;

using Mask = std::uint32_t;

inline bool mask_dot(Mask a, Mask b) { return (std::popcount(a & b) & 1) != 0; }

/// Closed neighbourhood columns of N as masks.
inline std::vector<Mask> closed_neighborhood_masks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > max_brute_order) {
    throw CapacityError("brute force enumeration is limited to n <= " + std::to_string(max_brute_order) +
                        ", got n=" + std::to_string(n));
  }
  std::vector<Mask> cols(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    cols[v] = Mask{1} << v;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && g.has_edge(u, v)) cols[v] |= Mask{1} << u;
    }
  }
  return cols;
}

/// Calls fn(p, N p) for every pattern p, walking patterns in Gray-code order.
template <class Fn>
void for_each_image(const std::vector<Mask>& cols, Fn&& fn) {
  const std::size_t n = cols.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  Mask p = 0;
  Mask image = 0;
  fn(p, image);
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(k));
    p ^= Mask{1} << bit;
    image ^= cols[bit];
    fn(p, image);
  }
}

inline BitVector to_vector(std::size_t n, Mask m) { return BitVector::from_mask(n, m); }

inline Mask to_mask(const BitVector& v) { return static_cast<Mask>(v.to_mask()); }

/// Ker(N) by full enumeration, ascending in text order.
inline std::vector<BitVector> brute_kernel(const Graph& g) {
  const auto cols = closed_neighborhood_masks(g);
  std::vector<BitVector> out;
  for_each_image(cols, [&](Mask p, Mask image) {
    if (image == 0) out.push_back(to_vector(cols.size(), p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Every p with N p = c, ascending in text order.
inline std::vector<BitVector> brute_solutions(const Graph& g, const BitVector& c,
                                              std::size_t cap = default_enumeration_cap) {
  const auto cols = closed_neighborhood_masks(g);
  if (c.size() != cols.size()) throw InputError("configuration length does not match n");
  const Mask target = to_mask(c);
  std::vector<BitVector> out;
  bool over = false;
  for_each_image(cols, [&](Mask p, Mask image) {
    if (image != target || over) return;
    if (out.size() == cap) {
      over = true;
      return;
    }
    out.push_back(to_vector(cols.size(), p));
  });
  if (over) throw CapacityError("more than " + std::to_string(cap) + " solving patterns");
  std::sort(out.begin(), out.end());
  return out;
}

/// Tallies x_A . p over every solving pattern p of c: all ones -> AO,
/// all zeros -> NO, exactly half -> HO.
inline ActivationClass brute_classify_set(const Graph& g, const std::vector<std::size_t>& set, const BitVector& c,
                                          std::size_t cap = default_enumeration_cap) {
  const auto x = BitVector::characteristic(g.vertex_count(), normalize_vertex_set(set, g.vertex_count()));
  const auto patterns = brute_solutions(g, c, cap);
  if (patterns.empty()) throw InputError("classification relative to unsolvable configuration " + c.to_string());
  std::size_t ones = 0;
  for (const auto& p : patterns) ones += dot(x, p) ? 1 : 0;
  if (ones == 0) return {ActivationTag::NO, c};
  if (ones == patterns.size()) return {ActivationTag::AO, c};
  if (2 * ones == patterns.size()) return {ActivationTag::HO, c};
  throw InternalError("x_A . p is 1 for " + std::to_string(ones) + " of " + std::to_string(patterns.size()) +
                      " solving patterns; expected none, all or half");
}

inline ActivationClass brute_classify_set(const Graph& g, const std::vector<std::size_t>& set) {
  return brute_classify_set(g, set, BitVector::ones(g.vertex_count()));
}

struct PatternPartitionCounts {
  std::uint64_t total = 0;  ///< solving patterns for c
  std::uint64_t o1_o2 = 0;  ///< x_A1 . p = 0 and x_A2 . p = 0
  std::uint64_t i1_i2 = 0;  ///< x_A1 . p = 1 and x_A2 . p = 1
  std::uint64_t o1 = 0;
  std::uint64_t i1 = 0;
};

/// Exact partition of the solving patterns of c by the two dot products.
/// Both sets must be HO and disjoint.
inline PatternPartitionCounts partition_counts(const Graph& g, const BitVector& c, const std::vector<std::size_t>& a1,
                                               const std::vector<std::size_t>& a2,
                                               std::size_t cap = default_enumeration_cap) {
  const std::size_t n = g.vertex_count();
  const auto s1 = normalize_vertex_set(a1, n, "a1");
  const auto s2 = normalize_vertex_set(a2, n, "a2");
  validate_star(g, {s1, s2});
  if (brute_classify_set(g, s1, c, cap).tag != ActivationTag::HO ||
      brute_classify_set(g, s2, c, cap).tag != ActivationTag::HO) {
    throw InputError("partition_counts: both sets must be HO");
  }
  const auto x1 = BitVector::characteristic(n, s1);
  const auto x2 = BitVector::characteristic(n, s2);
  PatternPartitionCounts out;
  for (const auto& p : brute_solutions(g, c, cap)) {
    const bool d1 = dot(x1, p);
    const bool d2 = dot(x2, p);
    ++out.total;
    out.o1 += !d1;
    out.i1 += d1;
    out.o1_o2 += !d1 && !d2;
    out.i1_i2 += d1 && d2;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma suite.

/// Every configuration's solving patterns for one small graph.
class PatternTable {
 public:
  static constexpr std::size_t max_order = 16;

  explicit PatternTable(const Graph& g) : n_(g.vertex_count()), cols_(closed_neighborhood_masks(g)) {
    if (n_ > max_order) throw CapacityError("PatternTable: n=" + std::to_string(n_) + " exceeds " + std::to_string(max_order));
    preimages_.resize(std::size_t{1} << n_);
    for (Mask p = 0; p < (Mask{1} << n_); ++p) {
      Mask image = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        if ((p >> v) & 1u) image ^= cols_[v];
      }
      preimages_[image].push_back(p);
    }
  }

  std::size_t order() const noexcept { return n_; }
  Mask all() const noexcept { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }
  Mask complement(Mask x) const noexcept { return x ^ all(); }
  Mask closed_neighborhood(std::size_t v) const { return cols_[v]; }

  const std::vector<Mask>& solutions(Mask c) const { return preimages_[c]; }
  const std::vector<Mask>& kernel() const { return preimages_[0]; }
  bool solvable(Mask c) const { return !preimages_[c].empty(); }

  /// Number of solving patterns p of c with x . p = 1.
  std::size_t tally(Mask x, Mask c) const {
    std::size_t ones = 0;
    for (auto p : preimages_[c]) ones += mask_dot(x, p);
    return ones;
  }

  /// Class by tally; nullopt if the tally is none of 0, half, all, or c is unsolvable.
  std::optional<ActivationTag> classify(Mask x, Mask c) const {
    const auto total = preimages_[c].size();
    if (total == 0) return std::nullopt;
    const auto ones = tally(x, c);
    if (ones == 0) return ActivationTag::NO;
    if (ones == total) return ActivationTag::AO;
    if (2 * ones == total) return ActivationTag::HO;
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::vector<Mask> cols_;
  std::vector<std::vector<Mask>> preimages_;
};

namespace suite {
enum Check : std::size_t {
  kKernelEquality,
  kAlwaysSolvable,
  kSolutionCount,
  kOrthogonality,
  kSutner,
  kHalfNull,
  kComplement,
  kSelfAnnihilation,
  kAoTransfer,
  kCrossParity,
  kCounting,
  kClassifyAgreement,
  kParityLemma,
};
}  // namespace suite

inline const std::vector<std::string>& lemma_suite_check_names() {
  static const std::vector<std::string> names{
      "kernel_equality",   "always_solvable", "solution_count", "orthogonality", "sutner_existence",
      "half_null_patterns", "complement", "self_annihilation", "ao_transfer", "cross_parity",
      "counting_lemma",    "classify_agreement", "parity_lemma"};
  return names;
}

inline std::string mask_text(std::size_t n, Mask m) { return to_vector(n, m).to_string(); }

/// Parity lemma by enumeration; skipped unless the graph is always solvable.
inline void check_parity_lemma_brute(const PatternTable& table, const Graph& g, CheckResult& out) {
  if (table.kernel().size() != 1) return;
  const std::size_t n = table.order();
  const Mask ones = table.all();
  const Mask s = table.solutions(ones).front();
  const bool pr_s = std::popcount(s) & 1;
  for (std::size_t u = 0; u < n; ++u) {
    const Mask p = table.solutions(table.complement(Mask{1} << u)).front();
    const bool lhs = mask_dot(table.complement(table.closed_neighborhood(u)), p);
    const bool rhs = ((s >> u) & 1u) ? !pr_s : pr_s;
    out.record(lhs == rhs, g, [&] { return "vertex " + std::to_string(u); });
  }
}

/// All lemma checks on one graph.
inline void check_lemmas(const Graph& g, SweepReport& r) {
  using namespace suite;
  const std::size_t n = g.vertex_count();
  const PatternTable table(g);
  const LightsOut fast(g);
  const Mask all = table.all();
  const Mask ones = all;
  const auto& kernel = table.kernel();

  // Elimination kernel vs enumerated kernel.
  {
    std::vector<Mask> span;
    const auto& basis = fast.null_basis();
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << basis.size()); ++k) {
      Mask m = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((k >> i) & 1u) m ^= to_mask(basis[i]);
      }
      span.push_back(m);
    }
    std::sort(span.begin(), span.end());
    r[kKernelEquality].record(span == kernel, g, [&] {
      return "elimination nullity " + std::to_string(basis.size()) + ", enumerated kernel size " +
             std::to_string(kernel.size());
    });
  }

  bool every_solvable = true;
  for (Mask c = 0; c <= all; ++c) every_solvable = every_solvable && table.solvable(c);
  r[kAlwaysSolvable].record(every_solvable == (fast.nullity() == 0), g);
  r[kSutner].record(table.solvable(ones), g);

  for (Mask c = 0; c <= all; ++c) {
    const auto& sols = table.solutions(c);
    const BitVector cv = to_vector(n, c);
    r[kOrthogonality].record(!sols.empty() == fast.is_solvable(cv), g, [&] { return "configuration " + cv.to_string(); });
    if (!sols.empty()) {
      bool same = sols.size() == (std::size_t{1} << fast.nullity());
      if (same && fast.nullity() <= 10) {
        const auto fast_set = fast.solve(cv);
        if (!fast_set) {
          same = false;
        } else {
          std::vector<Mask> members;
          for (const auto& p : enumerate_solutions(*fast_set)) members.push_back(to_mask(p));
          std::sort(members.begin(), members.end());
          same = members == sols;
        }
      }
      r[kSolutionCount].record(same, g, [&] { return "configuration " + cv.to_string(); });
    }
    r[kComplement].record(table.solvable(c) == table.solvable(table.complement(c)), g,
                          [&] { return "configuration " + cv.to_string(); });

    // x hits some null pattern => it hits exactly half of them.
    std::size_t hits = 0;
    for (auto l : kernel) hits += mask_dot(c, l);
    if (hits > 0) {
      r[kHalfNull].record(2 * hits == kernel.size(), g, [&] { return "vector " + cv.to_string(); });
    }

    // x solvable => x . p = 0 for every p solving the complement of x.
    if (table.solvable(c)) {
      bool zero = true;
      for (auto p : table.solutions(table.complement(c))) zero = zero && !mask_dot(c, p);
      r[kSelfAnnihilation].record(zero, g, [&] { return "configuration " + cv.to_string(); });

      // AO/NO relative to 1 is the same as relative to x_A.
      const auto rel_one = table.classify(c, ones);
      const auto rel_self = table.classify(c, c);
      r[kAoTransfer].record(rel_one && rel_self && *rel_one == *rel_self && *rel_one != ActivationTag::HO, g,
                            [&] { return "set " + cv.to_string(); });
    }
  }

  // Precomputed class (relative to 1) of every set.
  std::vector<std::optional<ActivationTag>> cls(std::size_t{all} + 1);
  for (Mask x = 0; x <= all; ++x) cls[x] = table.classify(x, ones);

  // Cross-parity lemma over ordered pairs of disjoint solvable sets.
  for (Mask a1 = 0; a1 <= all; ++a1) {
    if (!cls[a1] || *cls[a1] == ActivationTag::HO) continue;
    const Mask rest = table.complement(a1);
    for (Mask a2 = rest;; a2 = (a2 - 1) & rest) {
      if (cls[a2] && *cls[a2] != ActivationTag::HO) {
        const auto t12 = table.classify(a1, table.complement(a2));  // A1 rel complement of x_A2
        const auto t21 = table.classify(a2, table.complement(a1));  // A2 rel complement of x_A1
        bool ok = t12 && t21;
        if (ok) {
          const auto c1 = *cls[a1];
          const auto c2 = *cls[a2];
          if (c1 == c2) {
            ok = (*t12 == ActivationTag::NO) == (*t21 == ActivationTag::NO);
          } else if (c1 == ActivationTag::AO) {
            ok = (*t12 == ActivationTag::NO) == (*t21 == ActivationTag::AO);
          } else {
            ok = (*t21 == ActivationTag::NO) == (*t12 == ActivationTag::AO);
          }
        }
        r[kCrossParity].record(ok, g, [&] { return "A1=" + mask_text(n, a1) + " A2=" + mask_text(n, a2); });
      }
      if (a2 == 0) break;
    }
  }

  // Counting lemma: disjoint HO sets, every solvable configuration.
  if (kernel.size() > 1) {
    std::vector<Mask> ho;
    for (Mask x = 0; x <= all; ++x) {
      if (cls[x] && *cls[x] == ActivationTag::HO) ho.push_back(x);
    }
    for (Mask c = 0; c <= all; ++c) {
      const auto& sols = table.solutions(c);
      if (sols.empty()) continue;
      const std::size_t total = sols.size();
      for (auto a1 : ho) {
        for (auto a2 : ho) {
          if ((a1 & a2) != 0) continue;
          std::size_t oo = 0, ii = 0, union_ones = 0;
          for (auto p : sols) {
            const bool d1 = mask_dot(a1, p);
            const bool d2 = mask_dot(a2, p);
            oo += !d1 && !d2;
            ii += d1 && d2;
            union_ones += d1 != d2;
          }
          const auto u = table.classify(a1 | a2, c);
          bool ok = oo == ii && u.has_value();
          if (ok) {
            switch (*u) {
              case ActivationTag::NO: ok = 2 * oo == total && union_ones == 0; break;
              case ActivationTag::HO: ok = 4 * oo == total; break;
              case ActivationTag::AO: ok = oo == 0 && union_ones == total; break;
            }
          }
          r[kCounting].record(ok, g, [&] {
            return "c=" + mask_text(n, c) + " A1=" + mask_text(n, a1) + " A2=" + mask_text(n, a2) +
                   " |O1nO2|=" + std::to_string(oo) + " |I1nI2|=" + std::to_string(ii) + " total=" +
                   std::to_string(total);
          });
        }
      }
    }
  }

  // Elimination classification vs enumeration: singletons and pairs, c = 1 and c = x_A.
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      const Mask a = (Mask{1} << u) | (Mask{1} << v);
      const BitVector av = to_vector(n, a);
      for (const Mask c : {ones, a}) {
        const auto brute = table.classify(a, c);
        if (!table.solvable(c)) continue;
        const auto quick = fast.classify(av, to_vector(n, c)).tag;
        r[kClassifyAgreement].record(brute && *brute == quick, g, [&] {
          return "set " + av.to_string() + " relative to " + mask_text(n, c);
        });
      }
    }
  }

  check_parity_lemma_brute(table, g, r[kParityLemma]);
}

/// Sweeps every labeled graph with 1 <= n <= max_n through check_lemmas.
inline SweepReport verify_lemma_suite(std::size_t max_n, SweepOptions options = {}) {
  if (max_n > max_suite_order) {
    throw CapacityError("verify_lemma_suite: max_n " + std::to_string(max_n) + " exceeds " +
                        std::to_string(max_suite_order));
  }
  if (max_n < 1) throw InputError("verify_lemma_suite: max_n must be at least 1");
  return sweep_labeled_graphs(1, max_n, lemma_suite_check_names(), check_lemmas, options);
}

/// Only the enumerated parity lemma, which stays cheap one order further.
inline SweepReport parity_lemma_sweep(std::size_t max_n, SweepOptions options = {}) {
  if (max_n > max_suite_order + 1) {
    throw CapacityError("parity_lemma_sweep: max_n " + std::to_string(max_n) + " exceeds " +
                        std::to_string(max_suite_order + 1));
  }
  if (max_n < 1) throw InputError("parity_lemma_sweep: max_n must be at least 1");
  return sweep_labeled_graphs(
      1, max_n, {"parity_lemma"},
      [](const Graph& g, SweepReport& r) { check_parity_lemma_brute(PatternTable(g), g, r[0]); }, options);
}

}  // namespace lights_out::oracle
