#pragma once

// Graph ingestion and serialization: the JSON document
//   {"n": <int >= 1>, "edges": [[u, v], ...]}
// and standard graph6 (one graph per line, no ">>graph6<<" header).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lights_out/errors.hpp"
#include "lights_out/graph.hpp"

namespace lights_out {

/// Validates an already-parsed JSON value against the graph schema.
inline Graph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("graph: expected a JSON object");
  if (!doc.contains("n")) throw InputError("graph: missing field 'n'");
  const auto& jn = doc.at("n");
  if (!jn.is_number_integer()) throw InputError("graph.n: expected an integer");
  const auto n = jn.get<std::int64_t>();
  if (n < 1) throw InputError("graph.n: must be at least 1, got " + std::to_string(n));
  if (n > 100000) throw CapacityError("graph.n: " + std::to_string(n) + " vertices is too many");

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& je = doc.at("edges");
    if (!je.is_array()) throw InputError("graph.edges: expected an array");
    for (std::size_t k = 0; k < je.size(); ++k) {
      const auto& pair = je[k];
      const std::string where = "graph.edges[" + std::to_string(k) + "]";
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw InputError(where + ": expected [u, v] with integer endpoints");
      }
      const auto a = pair[0].get<std::int64_t>();
      const auto b = pair[1].get<std::int64_t>();
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw InputError(where + ": vertex out of range in [" + std::to_string(a) + "," + std::to_string(b) +
                         "] for n=" + std::to_string(n));
      }
      if (a == b) throw InputError(where + ": loop edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
      edges.push_back(make_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    }
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const InputError& e) {
    throw InputError(std::string("graph.") + e.what());
  }
}

inline Graph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph: malformed JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

// ---------------------------------------------------------------------------
// graph6

inline Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] < 63 || line[i] > 126) {
      throw InputError("graph6: invalid byte at position " + std::to_string(i));
    }
  }
  if (line.empty()) throw InputError("graph6: empty line");
  if (line.starts_with(">>")) throw InputError("graph6: header lines are not supported");

  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > line.size()) throw InputError("graph6: truncated order field");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
    return value;
  };
  std::uint64_t n = 0;
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n < 1) throw InputError("graph6: order must be at least 1");
  if (n > 100000) throw CapacityError("graph6: order " + std::to_string(n) + " is too large");

  const std::size_t bits = pair_count(static_cast<std::size_t>(n));
  const std::size_t expected = (bits + 5) / 6;
  if (line.size() - pos != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                     std::to_string(line.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  for (; k < expected * 6; ++k) {
    const int byte = line[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw InputError("graph6: non-zero padding bits");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

/// Parses one graph per non-empty line.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Accepts either the JSON document or a graph6 line (first non-empty line).
inline Graph parse_graph_auto(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
  if (i < text.size() && text[i] == '{') return parse_graph(text);
  auto graphs = parse_graph6_lines(text);
  if (graphs.empty()) throw InputError("graph: input is empty");
  return graphs.front();
}

}  // namespace lights_out
