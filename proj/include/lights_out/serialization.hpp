#pragma once

// JSON forms of results, witnesses and sweep reports. Field names are
// snake_case and stable; bit vectors are bitstrings with coordinate 0 first.

#include <string>
#include <vector>

#include "json.hpp"
#include "lights_out/analysis.hpp"
#include "lights_out/edgecalc.hpp"
#include "lights_out/gf2.hpp"
#include "lights_out/graph.hpp"
#include "lights_out/report.hpp"

namespace lights_out {

using nlohmann::json;

inline json to_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json to_json(const std::vector<BitVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

inline json tags_to_json(const std::vector<ActivationClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(std::string(to_string(c.tag)));
  return out;
}

inline json to_json(const AffineSolutionSet& s) {
  return {{"particular", s.particular.to_string()}, {"kernel_basis", to_json(s.kernel_basis)},
          {"dimension", s.dimension()}};
}

inline json to_json(const AnalysisSummary& a) {
  return {{"nullity", a.nullity},
          {"always_solvable", a.always_solvable},
          {"vertex_classes", tags_to_json(a.vertex_classes)},
          {"odd_dominating", to_json(a.odd_dominating)}};
}

inline json to_json(const ActivationClass& c) {
  return {{"tag", std::string(to_string(c.tag))}, {"relative_to", c.relative_to.to_string()}};
}

namespace detail {
inline json optional_tag(const std::optional<ActivationTag>& t) {
  return t ? json(std::string(to_string(*t))) : json(nullptr);
}
}  // namespace detail

inline json to_json(const StarAux& a) {
  return {{"mode", std::string(to_string(a.mode))},
          {"cross_tag", detail::optional_tag(a.cross_tag)},
          {"union_tag", detail::optional_tag(a.union_tag)}};
}

inline json to_json(const Prediction& p) {
  return {{"delta_nu", p.delta_nu},
          {"a1_after", std::string(to_string(p.class_a1_after))},
          {"a2_after", std::string(to_string(p.class_a2_after))}};
}

inline json to_json(const StarReport& r) {
  return {{"a1_before", std::string(to_string(r.a1_before))},
          {"a2_before", std::string(to_string(r.a2_before))},
          {"aux", to_json(r.aux)},
          {"predicted", to_json(r.predicted)},
          {"nullity_before", r.nullity_before},
          {"nullity_after", r.nullity_after},
          {"delta_nu", r.actual_delta_nu},
          {"a1_after", std::string(to_string(r.a1_after))},
          {"a2_after", std::string(to_string(r.a2_after))},
          {"agrees", r.agrees}};
}

inline json to_json(const EdgeAddition& a) {
  return {{"type_tag", std::string(to_string(a.tag))}, {"u", a.u}, {"v", a.v}};
}

inline json to_json(const EdgeWitness& w) {
  return {{"edge", to_json(w.edge)},
          {"nullity_before", w.nullity_before},
          {"nullity_after", w.nullity_after},
          {"delta_nu", static_cast<long long>(w.nullity_after) - static_cast<long long>(w.nullity_before)}};
}

inline json to_json(const Edit& e) {
  return {{"action", std::string(to_string(e.action))},
          {"edge", to_json(e.edge)},
          {"nullity_before", e.nullity_before},
          {"nullity_after", e.nullity_after},
          {"delta_nu", static_cast<long long>(e.nullity_after) - static_cast<long long>(e.nullity_before)}};
}

inline json to_json(const CharacterizationWitness& w) {
  return {{"kind", std::string(to_string(w.kind))},
          {"edge", to_json(w.edge)},
          {"type_tag", std::string(to_string(w.type))},
          {"inner_edge", w.inner_edge ? to_json(*w.inner_edge) : json(nullptr)},
          {"inner_type_tag", w.inner_type ? json(std::string(to_string(*w.inner_type))) : json(nullptr)},
          {"trajectory", w.trajectory}};
}

inline json to_json(const CheckResult& c) {
  json failure = nullptr;
  if (c.first_failure) failure = {{"graph_id", c.first_failure->graph_id}, {"details", c.first_failure->details}};
  return {{"checked", c.checked}, {"passed", c.passed}, {"first_failure", failure}};
}

/// {"max_n", "graphs", "all_passed", "checks": {name: {...}}}. Check order is
/// kept since nlohmann::ordered_json is used for the map.
inline nlohmann::ordered_json to_json(const SweepReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& c : r.checks) checks[c.name] = to_json(c);
  nlohmann::ordered_json out;
  out["max_n"] = r.max_n;
  out["graphs"] = r.graphs;
  out["all_passed"] = r.all_passed();
  out["checks"] = checks;
  return out;
}

}  // namespace lights_out
