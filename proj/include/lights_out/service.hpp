#pragma once

// Stateless JSON handlers behind the HTTP endpoints. Every handler is a pure
// function of the request body; transport lives in service_http.hpp.
//
//   POST /api/analyze {graph}            -> {nullity, alwaysSolvable, vertexClasses, oddDominatingCount, oddDominating}
//   POST /api/whatif  {graph, u, v}      -> {action, deltaNu, nullityBefore, nullityAfter, predictedDeltaNu,
//                                            beforeClasses, afterClasses, additionType?}
//   POST /api/solve   {graph, config}    -> {solvable, pattern, solutionCount} or {solvable, certificate}
//
// Errors are {"error": {"code", "message"}}: 400 when the body is malformed,
// 422 when a well-formed request violates a domain precondition.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "lights_out/analysis.hpp"
#include "lights_out/edgecalc.hpp"
#include "lights_out/errors.hpp"
#include "lights_out/graph_io.hpp"

namespace lights_out::service {

using Json = nlohmann::ordered_json;

struct Options {
  std::size_t max_order = 64;
  Type6Reading reading = Type6Reading::Amended;
};

struct Response {
  int status = 200;
  std::string body;
};

/// Raised for structurally invalid requests (HTTP 400).
class BadRequest : public Error {
 public:
  explicit BadRequest(const std::string& message, std::string code = "bad_request")
      : Error(message), code_(std::move(code)) {}
  const char* code() const noexcept override { return code_.c_str(); }

 private:
  std::string code_;
};

namespace detail {

inline nlohmann::json parse_body(std::string_view body) {
  try {
    auto doc = nlohmann::json::parse(body);
    if (!doc.is_object()) throw BadRequest("request body must be a JSON object");
    return doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw BadRequest(std::string("malformed JSON: ") + e.what(), "malformed_json");
  }
}

inline const nlohmann::json& field(const nlohmann::json& doc, const char* name) {
  if (!doc.contains(name)) throw BadRequest(std::string("missing field '") + name + "'");
  return doc.at(name);
}

inline Graph read_graph(const nlohmann::json& doc, const Options& options) {
  const auto& jg = field(doc, "graph");
  // The size guard comes first so oversized payloads are never materialized.
  if (jg.is_object() && jg.contains("n") && jg.at("n").is_number_integer() && jg.at("n").get<std::int64_t>() > 0 &&
      static_cast<std::uint64_t>(jg.at("n").get<std::int64_t>()) > options.max_order) {
    throw CapacityError("graph has " + std::to_string(jg.at("n").get<std::int64_t>()) +
                        " vertices; this service accepts at most " + std::to_string(options.max_order));
  }
  try {
    return graph_from_json(jg);
  } catch (const InputError& e) {
    throw BadRequest(e.what(), "invalid_graph");
  }
}

inline std::size_t read_vertex(const nlohmann::json& doc, const char* name, const Graph& g) {
  const auto& j = field(doc, name);
  if (!j.is_number_integer()) throw BadRequest(std::string("field '") + name + "' must be an integer");
  const auto x = j.get<std::int64_t>();
  if (x < 0 || static_cast<std::uint64_t>(x) >= g.vertex_count()) {
    throw InputError(std::string(name) + "=" + std::to_string(x) + " is not a vertex of a graph with n=" +
                     std::to_string(g.vertex_count()));
  }
  return static_cast<std::size_t>(x);
}

inline BitVector read_config(const nlohmann::json& doc, const Graph& g) {
  const auto& j = field(doc, "config");
  if (!j.is_string()) throw BadRequest("field 'config' must be a bitstring");
  BitVector c;
  try {
    c = BitVector::from_string(j.get<std::string>());
  } catch (const InputError& e) {
    throw BadRequest(std::string("config: ") + e.what(), "invalid_config");
  }
  if (c.size() != g.vertex_count()) {
    throw InputError("config has length " + std::to_string(c.size()) + " but the graph has n=" +
                     std::to_string(g.vertex_count()));
  }
  return c;
}

inline Json class_tags(const LightsOut& system) {
  Json out = Json::array();
  for (std::size_t v = 0; v < system.order(); ++v) out.push_back(std::string(to_string(system.vertex_class(v))));
  return out;
}

inline std::uint64_t pattern_count(std::size_t nullity) { return std::uint64_t{1} << nullity; }

}  // namespace detail

inline Json analyze(const nlohmann::json& request, const Options& options = {}) {
  const LightsOut system(detail::read_graph(request, options));
  Json out;
  out["nullity"] = system.nullity();
  out["alwaysSolvable"] = system.always_solvable();
  out["vertexClasses"] = detail::class_tags(system);
  out["oddDominatingCount"] = detail::pattern_count(system.nullity());
  out["oddDominating"] = system.odd_dominating().particular.to_string();
  return out;
}

/// Toggles the pair {u, v}: removal if adjacent, addition otherwise.
inline Json whatif(const nlohmann::json& request, const Options& options = {}) {
  const Graph g = detail::read_graph(request, options);
  const std::size_t u = detail::read_vertex(request, "u", g);
  const std::size_t v = detail::read_vertex(request, "v", g);
  if (u == v) throw InputError("u and v must be distinct vertices; got " + std::to_string(u) + " twice");
  const LightsOut before(g);
  const bool adding = !g.has_edge(u, v);
  const StarReport star = analyze_star(before, StarSpec{{u}, {v}});
  const LightsOut after(g.with_edge_toggled(u, v));

  Json out;
  out["action"] = adding ? "add" : "remove";
  out["deltaNu"] = star.actual_delta_nu;
  out["nullityBefore"] = star.nullity_before;
  out["nullityAfter"] = star.nullity_after;
  out["predictedDeltaNu"] = star.predicted.delta_nu;
  out["beforeClasses"] = detail::class_tags(before);
  out["afterClasses"] = detail::class_tags(after);
  if (adding) out["additionType"] = std::string(to_string(classify_edge_addition(before, u, v, options.reading).tag));
  return out;
}

inline Json solve(const nlohmann::json& request, const Options& options = {}) {
  const LightsOut system(detail::read_graph(request, options));
  const BitVector c = detail::read_config(request, system.graph());
  Json out;
  if (auto p = system.solve_particular(c)) {
    out["solvable"] = true;
    out["pattern"] = p->to_string();
    out["solutionCount"] = detail::pattern_count(system.nullity());
  } else {
    const auto l = system.unsolvability_certificate(c);
    if (!l) throw InternalError("unsolvable configuration without a certificate");
    out["solvable"] = false;
    out["certificate"] = l->to_string();
    out["solutionCount"] = 0;
  }
  return out;
}

inline Json error_body(std::string_view code, std::string_view message) {
  Json out;
  out["error"]["code"] = std::string(code);
  out["error"]["message"] = std::string(message);
  return out;
}

/// Dispatches a POST body to the handler for `path`.
inline Response handle(std::string_view path, std::string_view body, const Options& options = {}) {
  try {
    const auto request = detail::parse_body(body);
    Json result;
    if (path == "/api/analyze") {
      result = analyze(request, options);
    } else if (path == "/api/whatif") {
      result = whatif(request, options);
    } else if (path == "/api/solve") {
      result = solve(request, options);
    } else {
      return {404, error_body("not_found", "no endpoint " + std::string(path)).dump()};
    }
    return {200, result.dump()};
  } catch (const BadRequest& e) {
    return {400, error_body(e.code(), e.what()).dump()};
  } catch (const InternalError& e) {
    return {500, error_body(e.code(), e.what()).dump()};
  } catch (const Error& e) {
    return {422, error_body(e.code(), e.what()).dump()};
  } catch (const std::exception& e) {
    return {500, error_body("internal_error", e.what()).dump()};
  }
}

}  // namespace lights_out::service
