#pragma once

// Simple undirected labeled graphs and the edge edits used by the nullity
// calculus: single-edge toggles and the star operation between two disjoint
// vertex sets.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lights_out/errors.hpp"
#include "lights_out/gf2.hpp"

namespace lights_out {

/// An unordered vertex pair, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  std::string to_string() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
};

inline Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n), adjacency_(n, BitVector(n)) {}

  /// Validating constructor: rejects loops, out-of-range endpoints and duplicates.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto [a, b] = edges[k];
      const std::string where = "edges[" + std::to_string(k) + "]";
      if (a >= n || b >= n) {
        throw InputError(where + ": vertex out of range in (" + std::to_string(a) + "," + std::to_string(b) +
                         ") for n=" + std::to_string(n));
      }
      if (a == b) throw InputError(where + ": loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (g.has_edge(a, b)) throw InputError(where + ": duplicate edge " + make_edge(a, b).to_string());
      g.toggle(a, b);
    }
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.weight();
    return twice / 2;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[u].test(v);
  }

  std::size_t degree(std::size_t v) const {
    check_vertex(v);
    return adjacency_[v].weight();
  }

  /// Open neighbourhood as a characteristic vector.
  const BitVector& neighbors(std::size_t v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  /// Characteristic vector of N[v].
  BitVector closed_neighborhood(std::size_t v) const {
    BitVector x = neighbors(v);
    x.set(v);
    return x;
  }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u) {
      for (auto v : adjacency_[u].support()) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Non-adjacent pairs u < v in lexicographic order.
  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) {
        if (!adjacency_[u].test(v)) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Every vertex has even degree.
  bool is_even() const {
    return std::all_of(adjacency_.begin(), adjacency_.end(), [](const BitVector& r) { return !parity(r); });
  }

  /// G + uv when uv is absent, G - uv when present.
  Graph with_edge_toggled(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    Graph g(*this);
    g.toggle(u, v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void toggle(std::size_t u, std::size_t v) {
    adjacency_[u].flip(v);
    adjacency_[v].flip(u);
  }
  void check_vertex(std::size_t v) const {
    if (v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<BitVector> adjacency_;

  friend Graph star_operation_unchecked(const Graph&, std::span<const std::size_t>, std::span<const std::size_t>);
};

/// N(G): row i is the characteristic vector of N[v_i].
inline BitMatrix closed_neighborhood_matrix(const Graph& g) {
  std::vector<BitVector> rows;
  rows.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) rows.push_back(g.closed_neighborhood(v));
  if (rows.empty()) return BitMatrix(0, 0);
  return BitMatrix::from_rows(std::move(rows));
}

inline Graph toggle_edge(const Graph& g, std::size_t u, std::size_t v) { return g.with_edge_toggled(u, v); }

/// Two disjoint vertex sets A1, A2; every pair in A1 x A2 gets toggled.
struct StarSpec {
  std::vector<std::size_t> a1;
  std::vector<std::size_t> a2;
};

/// Vertex sets: sorted, duplicate-free, in range.
inline std::vector<std::size_t> normalize_vertex_set(std::vector<std::size_t> set, std::size_t n,
                                                     std::string_view name = "set") {
  std::sort(set.begin(), set.end());
  if (auto dup = std::adjacent_find(set.begin(), set.end()); dup != set.end()) {
    throw InputError(std::string(name) + ": duplicate vertex " + std::to_string(*dup));
  }
  if (!set.empty() && set.back() >= n) {
    throw InputError(std::string(name) + ": vertex " + std::to_string(set.back()) + " out of range for n=" +
                     std::to_string(n));
  }
  return set;
}

inline void validate_star(const Graph& g, const StarSpec& s) {
  const auto a1 = normalize_vertex_set(s.a1, g.vertex_count(), "a1");
  const auto a2 = normalize_vertex_set(s.a2, g.vertex_count(), "a2");
  std::vector<std::size_t> common;
  std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw InputError("a1 and a2 must be disjoint; both contain vertex " + std::to_string(common.front()));
  }
}

inline Graph star_operation_unchecked(const Graph& g, std::span<const std::size_t> a1,
                                      std::span<const std::size_t> a2) {
  Graph out(g);
  for (auto u : a1) {
    for (auto v : a2) out.toggle(u, v);
  }
  return out;
}

/// G*: toggles every edge between A1 and A2.
inline Graph star_operation(const Graph& g, const StarSpec& s) {
  validate_star(g, s);
  return star_operation_unchecked(g, s.a1, s.a2);
}

// ---------------------------------------------------------------------------
// Generators. Vertices are numbered along the path / row-major in the grid.

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path: n must be at least 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle: n must be at least 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw InputError("complete: n must be at least 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph::from_edges(n, e);
}

inline Graph empty_graph(std::size_t n) {
  if (n < 1) throw InputError("empty: n must be at least 1");
  return Graph(n);
}

inline Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw InputError("grid: dimensions must be at least 1");
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) e.push_back({v, v + 1});
      if (r + 1 < rows) e.push_back({v, v + cols});
    }
  }
  return Graph::from_edges(rows * cols, e);
}

/// Vertices of `h` are shifted by |V(g)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t shift = g.vertex_count();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.push_back({u + shift, v + shift});
  return Graph::from_edges(shift + h.vertex_count(), e);
}

/// Builds a named graph from "kind:params", e.g. "cycle:5", "grid:2x3",
/// "union:path:2+complete:3".
inline Graph generate_named(std::string_view spec) {
  if (spec.starts_with("union:")) {
    spec.remove_prefix(6);
    const auto plus = spec.find('+');
    if (plus == std::string_view::npos) throw InputError("union: expected '<graph>+<graph>'");
    return disjoint_union(generate_named(spec.substr(0, plus)), generate_named(spec.substr(plus + 1)));
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InputError("named graph: expected '<kind>:<params>'");
  const auto kind = spec.substr(0, colon);
  const auto params = spec.substr(colon + 1);
  auto to_count = [&](std::string_view s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        s.size() > 6) {
      throw InputError("named graph: invalid size '" + std::string(s) + "'");
    }
    return std::stoul(std::string(s));
  };
  if (kind == "path") return path_graph(to_count(params));
  if (kind == "cycle") return cycle_graph(to_count(params));
  if (kind == "complete") return complete_graph(to_count(params));
  if (kind == "empty") return empty_graph(to_count(params));
  if (kind == "grid") {
    const auto x = params.find('x');
    if (x == std::string_view::npos) throw InputError("grid: expected '<rows>x<cols>'");
    return grid_graph(to_count(params.substr(0, x)), to_count(params.substr(x + 1)));
  }
  throw InputError("named graph: unknown kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// Labeled enumeration.
//
// Graph k on n vertices has edge (u, v) iff bit j of k is set, where j is the
// position of (u, v) in the lexicographic list of pairs u < v.

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  // pairs before row u: sum_{i<u} (n - 1 - i)
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n) : n_(n) {
    if (n == 0) throw InputError("enumerate_labeled_graphs: n must be at least 1");
    if (pair_count(n) > 62) throw CapacityError("enumerate_labeled_graphs: 2^" + std::to_string(pair_count(n)) +
                                                " graphs is beyond the enumeration range");
  }

  std::size_t order() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << pair_count(n_); }

  Graph at(std::uint64_t index) const {
    if (index >= size()) throw InputError("graph index " + std::to_string(index) + " out of range");
    std::vector<Edge> e;
    std::size_t j = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v, ++j) {
        if ((index >> j) & 1u) e.push_back({u, v});
      }
    }
    return Graph::from_edges(n_, e);
  }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LabeledGraphs* owner, std::uint64_t index) : owner_(owner), index_(index) {}

    Graph operator*() const { return owner_->at(index_); }
    std::uint64_t index() const noexcept { return index_; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const LabeledGraphs* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::size_t n_;
};

inline LabeledGraphs enumerate_labeled_graphs(std::size_t n) { return LabeledGraphs(n); }

/// Inverse of LabeledGraphs::at.
inline std::uint64_t labeled_graph_index(const Graph& g) {
  if (pair_count(g.vertex_count()) > 62) throw CapacityError("graph too large for a labeled index");
  std::uint64_t k = 0;
  for (auto [u, v] : g.edges()) k |= std::uint64_t{1} << pair_index(g.vertex_count(), u, v);
  return k;
}

/// Stable identifier "<n>:<index>" used in verification reports.
inline std::string graph_id(const Graph& g) {
  return std::to_string(g.vertex_count()) + ":" + std::to_string(labeled_graph_index(g));
}

}  // namespace lights_out
