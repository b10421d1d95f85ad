#pragma once

// The edge-edit calculus.
//
// For disjoint A1, A2 the star operation G -> G* toggles every edge between
// them, so N* = N + J and for every pattern p
//
//     N* p = N p + (x_A1 . p) x_A2 + (x_A2 . p) x_A1.
//
// The activation classes of A1 and A2 in G, plus one auxiliary class, fix the
// change of nullity and the classes of A1 and A2 in G* (the eleven-row
// prediction table below). Everything else in this header builds on that
// table: edge-addition types, existence searches and the characterization
// witness for always solvable graphs.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lights_out/analysis.hpp"
#include "lights_out/errors.hpp"
#include "lights_out/gf2.hpp"
#include "lights_out/graph.hpp"

namespace lights_out {

enum class StarAuxMode { Cross, Union, None };

inline std::string_view to_string(StarAuxMode m) {
  switch (m) {
    case StarAuxMode::Cross: return "cross";
    case StarAuxMode::Union: return "union";
    case StarAuxMode::None: return "none";
  }
  return "?";
}

/// The "when" column of the table.
///  - Cross: neither set is HO; cross_tag is the class of A2 relative to the
///    complement of x_A1 (always NO or AO).
///  - Union: both sets are HO; union_tag is the class of A1 u A2 relative to 1.
///  - None: exactly one set is HO.
struct StarAux {
  StarAuxMode mode = StarAuxMode::None;
  std::optional<ActivationTag> cross_tag;
  std::optional<ActivationTag> union_tag;

  friend bool operator==(const StarAux&, const StarAux&) = default;
};

struct Prediction {
  int delta_nu = 0;
  ActivationTag class_a1_after = ActivationTag::NO;
  ActivationTag class_a2_after = ActivationTag::NO;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

struct PredictionRow {
  ActivationTag a1;
  ActivationTag a2;
  StarAuxMode mode;
  std::optional<ActivationTag> when;
  Prediction outcome;
};

// clang-format off
inline constexpr std::array<PredictionRow, 11> prediction_table{{
  {ActivationTag::NO, ActivationTag::NO, StarAuxMode::Cross, ActivationTag::NO, { 0, ActivationTag::NO, ActivationTag::NO}},
  {ActivationTag::NO, ActivationTag::NO, StarAuxMode::Cross, ActivationTag::AO, { 2, ActivationTag::HO, ActivationTag::HO}},
  {ActivationTag::NO, ActivationTag::AO, StarAuxMode::Cross, ActivationTag::NO, { 1, ActivationTag::AO, ActivationTag::HO}},
  {ActivationTag::NO, ActivationTag::AO, StarAuxMode::Cross, ActivationTag::AO, { 0, ActivationTag::NO, ActivationTag::AO}},
  {ActivationTag::AO, ActivationTag::AO, StarAuxMode::Cross, ActivationTag::NO, { 0, ActivationTag::AO, ActivationTag::AO}},
  {ActivationTag::AO, ActivationTag::AO, StarAuxMode::Cross, ActivationTag::AO, { 1, ActivationTag::HO, ActivationTag::HO}},
  {ActivationTag::HO, ActivationTag::HO, StarAuxMode::Union, ActivationTag::HO, {-2, ActivationTag::NO, ActivationTag::NO}},
  {ActivationTag::HO, ActivationTag::HO, StarAuxMode::Union, ActivationTag::AO, {-1, ActivationTag::AO, ActivationTag::AO}},
  {ActivationTag::HO, ActivationTag::HO, StarAuxMode::Union, ActivationTag::NO, { 0, ActivationTag::HO, ActivationTag::HO}},
  {ActivationTag::NO, ActivationTag::HO, StarAuxMode::None,  std::nullopt,      { 0, ActivationTag::NO, ActivationTag::HO}},
  {ActivationTag::AO, ActivationTag::HO, StarAuxMode::None,  std::nullopt,      {-1, ActivationTag::NO, ActivationTag::AO}},
}};
// clang-format on

inline StarAuxMode expected_aux_mode(ActivationTag a1, ActivationTag a2) {
  const int ho = (a1 == ActivationTag::HO) + (a2 == ActivationTag::HO);
  return ho == 0 ? StarAuxMode::Cross : ho == 2 ? StarAuxMode::Union : StarAuxMode::None;
}

/// Pure table lookup. The table lists each unordered class pair once (NO
/// before AO before HO); the star operation is symmetric in A1 and A2, so a
/// reversed pair is looked up swapped. For (AO, NO) the cross class has to be
/// re-expressed from A1's side: A1 is NO relative to the complement of x_A2
/// iff A2 is AO relative to the complement of x_A1.
inline Prediction predict_star(ActivationTag a1, ActivationTag a2, const StarAux& aux) {
  const StarAuxMode mode = expected_aux_mode(a1, a2);
  if (aux.mode != mode) {
    throw InputError("star aux mode '" + std::string(to_string(aux.mode)) + "' is inconsistent with classes (" +
                     std::string(to_string(a1)) + ", " + std::string(to_string(a2)) + "); expected '" +
                     std::string(to_string(mode)) + "'");
  }
  std::optional<ActivationTag> when;
  if (mode == StarAuxMode::Cross) {
    if (!aux.cross_tag || *aux.cross_tag == ActivationTag::HO) {
      throw InputError("star aux: cross mode needs a cross class of NO or AO");
    }
    when = aux.cross_tag;
  } else if (mode == StarAuxMode::Union) {
    if (!aux.union_tag) throw InputError("star aux: union mode needs a union class");
    when = aux.union_tag;
  }

  const bool swapped = static_cast<int>(a1) > static_cast<int>(a2);
  if (swapped) {
    std::swap(a1, a2);
    if (mode == StarAuxMode::Cross && a1 != a2) {
      when = (*when == ActivationTag::AO) ? ActivationTag::NO : ActivationTag::AO;
    }
  }
  for (const auto& row : prediction_table) {
    if (row.a1 == a1 && row.a2 == a2 && row.when == when) {
      Prediction p = row.outcome;
      if (swapped) std::swap(p.class_a1_after, p.class_a2_after);
      return p;
    }
  }
  throw InternalError("no prediction row for the given classes");
}

struct StarReport {
  ActivationTag a1_before = ActivationTag::NO;
  ActivationTag a2_before = ActivationTag::NO;
  StarAux aux;
  Prediction predicted;
  std::size_t nullity_before = 0;
  std::size_t nullity_after = 0;
  int actual_delta_nu = 0;
  ActivationTag a1_after = ActivationTag::NO;
  ActivationTag a2_after = ActivationTag::NO;
  bool agrees = false;
};

/// Classes of A1, A2 in G and the auxiliary class for the table.
inline std::pair<std::pair<ActivationTag, ActivationTag>, StarAux> star_inputs(const LightsOut& system,
                                                                             const BitVector& x1,
                                                                             const BitVector& x2) {
  const auto c1 = system.classify(x1).tag;
  const auto c2 = system.classify(x2).tag;
  StarAux aux;
  aux.mode = expected_aux_mode(c1, c2);
  if (aux.mode == StarAuxMode::Cross) {
    aux.cross_tag = system.classify(x2, x1.complement()).tag;
  } else if (aux.mode == StarAuxMode::Union) {
    aux.union_tag = system.classify(x1 | x2).tag;
  }
  return {{c1, c2}, aux};
}

/// Predicts with the table, then applies the star operation and recomputes.
inline StarReport analyze_star(const LightsOut& system, const StarSpec& spec) {
  const Graph& g = system.graph();
  validate_star(g, spec);
  if (spec.a1.empty() || spec.a2.empty()) throw InputError("analyze_star: a1 and a2 must be non-empty");
  const std::size_t n = g.vertex_count();
  const BitVector x1 = BitVector::characteristic(n, spec.a1);
  const BitVector x2 = BitVector::characteristic(n, spec.a2);

  StarReport r;
  const auto [classes, aux] = star_inputs(system, x1, x2);
  r.a1_before = classes.first;
  r.a2_before = classes.second;
  r.aux = aux;
  r.predicted = predict_star(r.a1_before, r.a2_before, r.aux);

  const LightsOut after(star_operation_unchecked(g, spec.a1, spec.a2));
  r.nullity_before = system.nullity();
  r.nullity_after = after.nullity();
  r.actual_delta_nu = static_cast<int>(r.nullity_after) - static_cast<int>(r.nullity_before);
  r.a1_after = after.classify(x1).tag;
  r.a2_after = after.classify(x2).tag;
  r.agrees = r.predicted.delta_nu == r.actual_delta_nu && r.predicted.class_a1_after == r.a1_after &&
             r.predicted.class_a2_after == r.a2_after;
  return r;
}

inline StarReport analyze_star(const Graph& g, const StarSpec& spec) { return analyze_star(LightsOut(g), spec); }

// ---------------------------------------------------------------------------
// Edge-addition types.

enum class EdgeAdditionTag { Type1, Type2, Type3, Type4, Type5, Type6, Other };

inline std::string_view to_string(EdgeAdditionTag t) {
  switch (t) {
    case EdgeAdditionTag::Type1: return "Type-1";
    case EdgeAdditionTag::Type2: return "Type-2";
    case EdgeAdditionTag::Type3: return "Type-3";
    case EdgeAdditionTag::Type4: return "Type-4";
    case EdgeAdditionTag::Type5: return "Type-5";
    case EdgeAdditionTag::Type6: return "Type-6";
    case EdgeAdditionTag::Other: return "Other";
  }
  return "?";
}

/// How Type 6 is read. `Amended` requires {u, v} to be AO relative to 1 (the
/// case in which adding uv lowers the nullity by one); `StrictText` requires
/// {u, v} to be HO.
enum class Type6Reading { Amended, StrictText };

struct EdgeAddition {
  EdgeAdditionTag tag = EdgeAdditionTag::Other;
  std::size_t u = 0;  ///< endpoint in the "u" role after orientation
  std::size_t v = 0;
};

/// Types 1-4 use the class of {v} relative to the complement of x_{u}; for an
/// always solvable graph that is exactly p(v) for the unique p solving it.
inline EdgeAddition classify_edge_addition(const LightsOut& system, std::size_t u, std::size_t v,
                                           Type6Reading reading = Type6Reading::Amended) {
  const Graph& g = system.graph();
  if (u == v) throw InputError("edge addition needs two distinct vertices; got (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
  if (g.has_edge(u, v)) {
    throw InputError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are already adjacent");
  }
  const std::size_t n = g.vertex_count();
  auto cu = system.vertex_class(u);
  auto cv = system.vertex_class(v);
  // Orient so that the "u" role holds the lower class (NO < AO < HO).
  if (static_cast<int>(cu) > static_cast<int>(cv)) {
    std::swap(u, v);
    std::swap(cu, cv);
  }
  EdgeAddition out{EdgeAdditionTag::Other, u, v};
  auto p_of_v = [&] {
    return system.classify(BitVector::unit(n, v), BitVector::unit(n, u).complement()).tag == ActivationTag::AO;
  };
  using enum ActivationTag;
  if (cu == NO && cv == AO) {
    out.tag = p_of_v() ? EdgeAdditionTag::Type1 : EdgeAdditionTag::Type3;
  } else if (cu == AO && cv == AO) {
    out.tag = p_of_v() ? EdgeAdditionTag::Type4 : EdgeAdditionTag::Type2;
  } else if (cu == AO && cv == HO) {
    out.tag = EdgeAdditionTag::Type5;
  } else if (cu == HO && cv == HO) {
    const auto pair_class = system.classify(BitVector::unit(n, u) | BitVector::unit(n, v)).tag;
    const auto wanted = reading == Type6Reading::Amended ? AO : HO;
    if (pair_class == wanted) out.tag = EdgeAdditionTag::Type6;
  }
  return out;
}

inline EdgeAddition classify_edge_addition(const Graph& g, std::size_t u, std::size_t v,
                                           Type6Reading reading = Type6Reading::Amended) {
  return classify_edge_addition(LightsOut(g), u, v, reading);
}

// ---------------------------------------------------------------------------
// Existence searches. Every search returns the lexicographically smallest
// witness in (u, v) order.

struct EdgeWitness {
  Edge edge;
  std::size_t nullity_before = 0;
  std::size_t nullity_after = 0;
};

/// Smallest edge whose removal lowers the nullity. Exists for every graph of
/// positive nullity that has an edge.
inline EdgeWitness find_nullity_decreasing_edge(const Graph& g) {
  const std::size_t before = nullity(g);
  if (before == 0) throw PreconditionError("graph is always solvable; a nullity-decreasing edge needs positive nullity");
  const auto edges = g.edges();
  if (edges.empty()) throw NoWitnessError("graph has no edges; no edge exists to remove");
  for (const auto& e : edges) {
    const std::size_t after = nullity(g.with_edge_toggled(e.u, e.v));
    if (after < before) return {e, before, after};
  }
  throw NoWitnessError("no edge removal decreases the nullity");
}

/// Smallest non-edge whose addition makes an always solvable graph
/// unsolvable, or nullopt when every addition keeps the nullity zero.
inline std::optional<EdgeWitness> find_nullity_increasing_addition(const Graph& g) {
  if (nullity(g) != 0) throw PreconditionError("graph has positive nullity; the search needs an always solvable graph");
  for (const auto& e : g.non_edges()) {
    const std::size_t after = nullity(g.with_edge_toggled(e.u, e.v));
    if (after > 0) return EdgeWitness{e, 0, after};
  }
  return std::nullopt;
}

enum class EditAction { Add, Remove };

inline std::string_view to_string(EditAction a) { return a == EditAction::Add ? "add" : "remove"; }

struct Edit {
  EditAction action = EditAction::Remove;
  Edge edge;
  std::size_t nullity_before = 0;
  std::size_t nullity_after = 0;
};

/// An edit lowering the nullity by exactly two; removals are tried first.
inline Edit find_delta_minus2_edit(const Graph& g) {
  const std::size_t before = nullity(g);
  if (before < 2) throw PreconditionError("nullity " + std::to_string(before) + " is below 2");
  for (const auto& e : g.edges()) {
    if (nullity(g.with_edge_toggled(e.u, e.v)) + 2 == before) return {EditAction::Remove, e, before, before - 2};
  }
  for (const auto& e : g.non_edges()) {
    if (nullity(g.with_edge_toggled(e.u, e.v)) + 2 == before) return {EditAction::Add, e, before, before - 2};
  }
  throw NoWitnessError("no single edge edit lowers the nullity by 2");
}

// ---------------------------------------------------------------------------
// Characterization of always solvable graphs.

enum class WitnessKind { A, B };

inline std::string_view to_string(WitnessKind k) { return k == WitnessKind::A ? "A" : "B"; }

/// Kind A: G = G' + e with G' always solvable and e a Type 1/2 addition.
/// Kind B: G = (G'' + f) + e with G'' always solvable, f a Type 3/4 addition
/// (nullity 0 -> 1) and e a Type 5/6 addition (nullity 1 -> 0).
struct CharacterizationWitness {
  WitnessKind kind = WitnessKind::A;
  Edge edge;
  EdgeAdditionTag type = EdgeAdditionTag::Other;
  std::optional<Edge> inner_edge;
  std::optional<EdgeAdditionTag> inner_type;
  /// Nullities along the additions, smallest graph first: {0, 0} or {0, 1, 0}.
  std::vector<std::size_t> trajectory;
};

inline bool is_type_1_or_2(EdgeAdditionTag t) { return t == EdgeAdditionTag::Type1 || t == EdgeAdditionTag::Type2; }
inline bool is_type_3_or_4(EdgeAdditionTag t) { return t == EdgeAdditionTag::Type3 || t == EdgeAdditionTag::Type4; }
inline bool is_type_5_or_6(EdgeAdditionTag t) { return t == EdgeAdditionTag::Type5 || t == EdgeAdditionTag::Type6; }

inline void require_nonempty_always_solvable(const Graph& g, std::string_view what) {
  if (nullity(g) != 0) throw PreconditionError(std::string(what) + ": graph must be always solvable");
  if (g.edge_count() == 0) throw PreconditionError(std::string(what) + ": graph must have at least one edge");
}

/// Kind A is preferred. Kind B candidates are scanned with the inner edge f in
/// the outer loop, then e, both in lexicographic order.
inline CharacterizationWitness verify_characterization(const Graph& g,
                                                       Type6Reading reading = Type6Reading::Amended) {
  require_nonempty_always_solvable(g, "verify_characterization");
  const auto edges = g.edges();
  for (const auto& e : edges) {
    const LightsOut minus_e(g.with_edge_toggled(e.u, e.v));
    if (minus_e.nullity() != 0) continue;
    const auto t = classify_edge_addition(minus_e, e.u, e.v, reading).tag;
    if (is_type_1_or_2(t)) return {WitnessKind::A, e, t, std::nullopt, std::nullopt, {0, 0}};
  }
  for (const auto& f : edges) {
    for (const auto& e : edges) {
      if (e == f) continue;
      const LightsOut minus_e(g.with_edge_toggled(e.u, e.v));
      if (minus_e.nullity() != 1) continue;
      const LightsOut minus_ef(minus_e.graph().with_edge_toggled(f.u, f.v));
      if (minus_ef.nullity() != 0) continue;
      const auto inner = classify_edge_addition(minus_ef, f.u, f.v, reading).tag;
      if (!is_type_3_or_4(inner)) continue;
      const auto outer = classify_edge_addition(minus_e, e.u, e.v, reading).tag;
      if (!is_type_5_or_6(outer)) continue;
      return {WitnessKind::B, e, outer, f, inner, {0, 1, 0}};
    }
  }
  throw NoWitnessError("no characterization witness found");
}

/// Replays the witness from the smaller graph and checks every claim.
inline bool replay_characterization(const Graph& g, const CharacterizationWitness& w,
                                    Type6Reading reading = Type6Reading::Amended) {
  try {
    if (!g.has_edge(w.edge.u, w.edge.v)) return false;
    const Graph minus_e = g.with_edge_toggled(w.edge.u, w.edge.v);
    if (w.kind == WitnessKind::A) {
      const LightsOut start(minus_e);
      if (start.nullity() != 0 || !is_type_1_or_2(w.type)) return false;
      if (classify_edge_addition(start, w.edge.u, w.edge.v, reading).tag != w.type) return false;
      const Graph rebuilt = minus_e.with_edge_toggled(w.edge.u, w.edge.v);
      return rebuilt == g && nullity(rebuilt) == 0 && w.trajectory == std::vector<std::size_t>{0, 0};
    }
    if (!w.inner_edge || !w.inner_type) return false;
    const Edge f = *w.inner_edge;
    if (f == w.edge || !minus_e.has_edge(f.u, f.v)) return false;
    const LightsOut start(minus_e.with_edge_toggled(f.u, f.v));
    if (start.nullity() != 0 || !is_type_3_or_4(*w.inner_type) || !is_type_5_or_6(w.type)) return false;
    if (classify_edge_addition(start, f.u, f.v, reading).tag != *w.inner_type) return false;
    const LightsOut middle(start.graph().with_edge_toggled(f.u, f.v));
    if (middle.nullity() != 1) return false;
    if (classify_edge_addition(middle, w.edge.u, w.edge.v, reading).tag != w.type) return false;
    const Graph rebuilt = middle.graph().with_edge_toggled(w.edge.u, w.edge.v);
    return rebuilt == g && nullity(rebuilt) == 0 && w.trajectory == std::vector<std::size_t>{0, 1, 0};
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Degree parity and the parity lemma.

enum class DegreeParityOutcome { HypothesisFailed, Verified, Violated };

inline std::string_view to_string(DegreeParityOutcome o) {
  switch (o) {
    case DegreeParityOutcome::HypothesisFailed: return "hypothesis_failed";
    case DegreeParityOutcome::Verified: return "verified";
    case DegreeParityOutcome::Violated: return "violated";
  }
  return "?";
}

/// When every edge removal raises the nullity of an always solvable graph,
/// always activated vertices must have even degree and never activated
/// vertices odd degree.
inline DegreeParityOutcome check_degree_parity(const Graph& g) {
  const LightsOut system(g);
  if (system.nullity() != 0) throw PreconditionError("check_degree_parity: graph must be always solvable");
  for (const auto& e : g.edges()) {
    if (nullity(g.with_edge_toggled(e.u, e.v)) == 0) return DegreeParityOutcome::HypothesisFailed;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const bool even = g.degree(v) % 2 == 0;
    const auto tag = system.vertex_class(v);
    if ((tag == ActivationTag::AO) != even) return DegreeParityOutcome::Violated;
  }
  return DegreeParityOutcome::Verified;
}

/// With p solving the complement of x_{u} and s the odd dominating pattern:
/// (complement of x_N[u]) . p equals pr(s) when u is NO and 1 - pr(s) when u is AO.
inline bool check_parity_lemma(const LightsOut& system, std::size_t u) {
  if (system.nullity() != 0) throw PreconditionError("parity lemma is stated for always solvable graphs");
  const std::size_t n = system.order();
  const auto p = system.solve_particular(BitVector::unit(n, u).complement());
  if (!p) throw InternalError("complement of a unit vector is unsolvable in an always solvable graph");
  const BitVector s = system.odd_dominating().particular;
  const bool lhs = dot(system.graph().closed_neighborhood(u).complement(), *p);
  const bool rhs = s.test(u) ? !parity(s) : parity(s);
  return lhs == rhs;
}

inline bool check_parity_lemma(const Graph& g, std::size_t u) {
  if (u >= g.vertex_count()) throw InputError("vertex " + std::to_string(u) + " out of range");
  return check_parity_lemma(LightsOut(g), u);
}

}  // namespace lights_out
