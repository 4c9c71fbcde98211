#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromax/error.hpp"

namespace chromax {

/// Vertex subset of a graph on at most 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  while (s) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64). Each vertex keeps its
/// neighbor set as a bitmask. Values are immutable through the public API:
/// every modifying operation returns a new graph.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(check_order(n), 0) {}

  /// Throws InvalidEdge on a loop or an out-of-range endpoint; duplicate
  /// edges collapse.
  static SimpleGraph from_edge_list(int n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(Errc::invalid_edge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw Error(Errc::invalid_edge, "self-loop at vertex " + std::to_string(u));
      g.link(u, v);
    }
    return g;
  }

  /// Build from per-vertex neighbor masks; the relation is symmetrized and
  /// the diagonal cleared.
  static SimpleGraph from_adjacency(std::vector<VertexSet> adj) {
    SimpleGraph g(static_cast<int>(adj.size()));
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      VertexSet row = adj[static_cast<std::size_t>(u)] & all_vertices(n) & ~bit(u);
      for (int v : members(row)) g.link(u, v);
    }
    return g;
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const noexcept { return all_vertices(order()); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1u; }
  const std::vector<VertexSet>& adjacency() const noexcept { return adj_; }

  int size() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += popcount(row);
    return twice / 2;
  }

  int max_degree() const {
    int d = 0;
    for (VertexSet row : adj_) d = std::max(d, popcount(row));
    return d;
  }

  int min_degree() const {
    if (adj_.empty()) return 0;
    int d = kMaxVertices;
    for (VertexSet row : adj_) d = std::min(d, popcount(row));
    return d;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
      for (int v : members(neighbors(u) & ~all_vertices(u + 1))) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const {
    const int n = order();
    for (int v = 0; v < n; ++v)
      if (neighbors(v) != (all_vertices(n) & ~bit(v))) return false;
    return true;
  }

  bool is_clique(VertexSet s) const {
    for (int v : members(s))
      if ((s & ~bit(v) & ~neighbors(v)) != 0) return false;
    return true;
  }

  bool is_stable(VertexSet s) const {
    for (int v : members(s))
      if (s & neighbors(v)) return false;
    return true;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.adj_ == b.adj_; }
  friend bool operator!=(const SimpleGraph& a, const SimpleGraph& b) { return !(a == b); }

  SimpleGraph add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(Errc::invalid_vertex, "add_edge requires distinct vertices");
    SimpleGraph g = *this;
    g.link(u, v);
    return g;
  }

  SimpleGraph remove_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    SimpleGraph g = *this;
    g.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    g.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
    return g;
  }

  /// Induced subgraph on `keep`, relabeled densely in increasing vertex order.
  SimpleGraph induced(VertexSet keep) const {
    keep &= vertices();
    const std::vector<int> old = members(keep);
    std::vector<int> pos(static_cast<std::size_t>(order()), -1);
    for (std::size_t i = 0; i < old.size(); ++i) pos[static_cast<std::size_t>(old[i])] = static_cast<int>(i);
    SimpleGraph g(static_cast<int>(old.size()));
    for (std::size_t i = 0; i < old.size(); ++i) {
      VertexSet row = 0;
      for (int w : members(neighbors(old[i]) & keep)) row |= bit(pos[static_cast<std::size_t>(w)]);
      g.adj_[i] = row;
    }
    return g;
  }

  SimpleGraph delete_vertex(int u) const {
    check_vertex(u);
    return induced(vertices() & ~bit(u));
  }

  /// Identify u and v (adjacent or not) and collapse multi-edges. The merged
  /// vertex takes the smaller label; labels above the larger one shift down.
  SimpleGraph contract(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(Errc::invalid_vertex, "contract requires distinct vertices");
    if (u > v) std::swap(u, v);
    SimpleGraph g = *this;
    VertexSet merged = (neighbors(u) | neighbors(v)) & ~bit(u) & ~bit(v);
    for (int w : members(neighbors(v))) g.adj_[static_cast<std::size_t>(w)] &= ~bit(v);
    g.adj_[static_cast<std::size_t>(v)] = 0;
    g.adj_[static_cast<std::size_t>(u)] = merged;
    for (int w : members(merged)) g.adj_[static_cast<std::size_t>(w)] |= bit(u);
    return g.induced(g.vertices() & ~bit(v));
  }

  SimpleGraph complement() const {
    const int n = order();
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = all_vertices(n) & ~bit(v) & ~neighbors(v);
    return g;
  }

  /// perm[v] is the new label of vertex v.
  SimpleGraph relabel(const std::vector<int>& perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n) throw Error(Errc::invalid_params, "permutation size mismatch");
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v)
      for (int w : members(neighbors(v))) g.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] |= bit(perm[static_cast<std::size_t>(w)]);
    return g;
  }

  /// Disjoint union; vertices of `other` are shifted by order().
  SimpleGraph disjoint_union(const SimpleGraph& other) const {
    const int n = order();
    SimpleGraph g(n + other.order());
    for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = neighbors(v);
    for (int v = 0; v < other.order(); ++v) g.adj_[static_cast<std::size_t>(n + v)] = other.neighbors(v) << n;
    return g;
  }

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxVertices) throw Error(Errc::too_large, "graph order must be in [0, 64], got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= order()) throw Error(Errc::invalid_vertex, "vertex " + std::to_string(v) + " out of range");
  }
  void link(int u, int v) {
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
  }

  std::vector<VertexSet> adj_;
};

inline SimpleGraph from_edge_list(int n, const std::vector<Edge>& edges) { return SimpleGraph::from_edge_list(n, edges); }

// ---------------------------------------------------------------------------
// Connectivity helpers

/// Vertices reachable from `start` inside `within`.
inline VertexSet reachable(const SimpleGraph& g, int start, VertexSet within) {
  VertexSet seen = bit(start) & within;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of g[within], ordered by smallest vertex.
inline std::vector<VertexSet> components(const SimpleGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  within &= g.vertices();
  while (within) {
    VertexSet c = reachable(g, lowest(within), within);
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

inline std::vector<VertexSet> components(const SimpleGraph& g) { return components(g, g.vertices()); }

/// The empty graph counts as connected.
inline bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

inline bool separates(const SimpleGraph& g, VertexSet cut) {
  return components(g, g.vertices() & ~cut).size() >= 2;
}

// ---------------------------------------------------------------------------
// Edge-list JSON: {"n": int, "edges": [[u, v], ...]}

inline nlohmann::json to_edge_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline SimpleGraph from_edge_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() || !j["edges"].is_array())
    throw Error(Errc::parse_error, "edge-list JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(Errc::parse_error, "each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return SimpleGraph::from_edge_list(j["n"].get<int>(), edges);
}

}  // namespace chromax
