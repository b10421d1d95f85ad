#pragma once

// Lights Out semantics on a graph: nullity, solvability, odd dominating
// patterns and the NO / AO / HO activation classes.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lights_out/errors.hpp"
#include "lights_out/gf2.hpp"
#include "lights_out/graph.hpp"

namespace lights_out {

/// NO: x_A . p = 0 for every solving pattern p of c.
/// AO: x_A . p = 1 for every solving pattern p of c.
/// HO: x_A . p = 1 for exactly half of them (A is unsolvable as a configuration).
enum class ActivationTag { NO, AO, HO };

inline std::string_view to_string(ActivationTag t) {
  switch (t) {
    case ActivationTag::NO: return "NO";
    case ActivationTag::AO: return "AO";
    case ActivationTag::HO: return "HO";
  }
  return "?";
}

inline ActivationTag parse_activation_tag(std::string_view s) {
  if (s == "NO") return ActivationTag::NO;
  if (s == "AO") return ActivationTag::AO;
  if (s == "HO") return ActivationTag::HO;
  throw InputError("unknown activation class '" + std::string(s) + "'");
}

struct ActivationClass {
  ActivationTag tag = ActivationTag::NO;
  BitVector relative_to;  ///< the configuration c

  friend bool operator==(const ActivationClass&, const ActivationClass&) = default;
};

/// The linear system N(G) p = c, eliminated once and reused for every
/// configuration and classification on the same graph.
class LightsOut {
 public:
  explicit LightsOut(Graph g)
      : graph_(std::move(g)),
        matrix_(closed_neighborhood_matrix(graph_)),
        reduction_(matrix_),
        null_basis_(reduction_.kernel_basis()) {}

  const Graph& graph() const noexcept { return graph_; }
  const BitMatrix& matrix() const noexcept { return matrix_; }
  std::size_t order() const noexcept { return graph_.vertex_count(); }

  std::size_t nullity() const noexcept { return null_basis_.size(); }
  bool always_solvable() const noexcept { return nullity() == 0; }

  /// Basis of Ker(N), the null patterns.
  const std::vector<BitVector>& null_basis() const noexcept { return null_basis_; }

  /// Solvable iff orthogonal to every null pattern (N is symmetric).
  bool is_solvable(const BitVector& c) const {
    check_length(c, "configuration");
    for (const auto& l : null_basis_) {
      if (dot(c, l)) return false;
    }
    return true;
  }

  /// First null basis vector with c . l = 1, if c is unsolvable.
  std::optional<BitVector> unsolvability_certificate(const BitVector& c) const {
    check_length(c, "configuration");
    for (const auto& l : null_basis_) {
      if (dot(c, l)) return l;
    }
    return std::nullopt;
  }

  std::optional<AffineSolutionSet> solve(const BitVector& c) const {
    check_length(c, "configuration");
    auto p = reduction_.particular(c);
    if (!p) return std::nullopt;
    return AffineSolutionSet{std::move(*p), null_basis_};
  }

  /// The canonical solving pattern (free variables zero).
  std::optional<BitVector> solve_particular(const BitVector& c) const {
    check_length(c, "configuration");
    return reduction_.particular(c);
  }

  AffineSolutionSet odd_dominating() const {
    auto s = solve(BitVector::ones(order()));
    if (!s) throw InternalError("all-ones configuration reported unsolvable");
    return *std::move(s);
  }

  /// Class of the set with characteristic vector `set` relative to `c`.
  ///
  /// HO iff the set is not orthogonal to the kernel. Otherwise x_A . p is the
  /// same for every solving pattern p, so one pattern decides AO / NO.
  ActivationClass classify(const BitVector& set, const BitVector& c) const {
    check_length(set, "vertex set");
    auto p = solve_particular(c);
    if (!p) throw InputError("classification relative to unsolvable configuration " + c.to_string());
    if (!is_solvable(set)) return {ActivationTag::HO, c};
    return {dot(set, *p) ? ActivationTag::AO : ActivationTag::NO, c};
  }

  ActivationClass classify(const BitVector& set) const { return classify(set, BitVector::ones(order())); }

  /// Tag of {v} relative to the all-ones configuration.
  ActivationTag vertex_class(std::size_t v) const {
    return classify(BitVector::unit(order(), v)).tag;
  }

 private:
  void check_length(const BitVector& x, std::string_view what) const {
    if (x.size() != order()) {
      throw InputError(std::string(what) + " length " + std::to_string(x.size()) + " does not match n=" +
                       std::to_string(order()));
    }
  }

  Graph graph_;
  BitMatrix matrix_;
  RowReduction reduction_;
  std::vector<BitVector> null_basis_;
};

inline std::size_t nullity(const Graph& g) { return RowReduction(closed_neighborhood_matrix(g)).nullity(); }

inline bool is_always_solvable(const Graph& g) { return nullity(g) == 0; }

inline std::optional<AffineSolutionSet> solve_configuration(const Graph& g, const BitVector& c) {
  return LightsOut(g).solve(c);
}

inline AffineSolutionSet odd_dominating_patterns(const Graph& g) { return LightsOut(g).odd_dominating(); }

inline BitVector vertex_set_vector(std::size_t n, std::vector<std::size_t> set, std::string_view name = "set") {
  return BitVector::characteristic(n, normalize_vertex_set(std::move(set), n, name));
}

inline ActivationClass classify_set(const Graph& g, std::vector<std::size_t> set, const BitVector& c) {
  return LightsOut(g).classify(vertex_set_vector(g.vertex_count(), std::move(set)), c);
}

inline ActivationClass classify_set(const Graph& g, std::vector<std::size_t> set) {
  return classify_set(g, std::move(set), BitVector::ones(g.vertex_count()));
}

inline std::vector<ActivationClass> classify_vertices(const LightsOut& system) {
  std::vector<ActivationClass> out;
  const auto ones = BitVector::ones(system.order());
  for (std::size_t v = 0; v < system.order(); ++v) {
    out.push_back(system.classify(BitVector::unit(system.order(), v), ones));
  }
  return out;
}

inline std::vector<ActivationClass> classify_vertices(const Graph& g) { return classify_vertices(LightsOut(g)); }

struct AnalysisSummary {
  std::size_t nullity = 0;
  bool always_solvable = true;
  std::vector<ActivationClass> vertex_classes;
  AffineSolutionSet odd_dominating;
};

inline AnalysisSummary analyze(const Graph& g) {
  const LightsOut system(g);
  return {system.nullity(), system.always_solvable(), classify_vertices(system), system.odd_dominating()};
}

}  // namespace lights_out
