#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "chromax/graph.hpp"
#include "chromax/invariants.hpp"

namespace chromax {

/// An initial cycle (vertex sequence, closing edge implied) followed by ears.
/// Each ear is a vertex path whose two distinct endpoints already lie in the
/// structure built so far and whose internal vertices are new.
struct EarDecomposition {
  std::vector<int> initial_cycle;
  std::vector<std::vector<int>> ears;

  /// Number of elements counting the initial cycle.
  std::size_t element_count() const { return ears.size() + 1; }
};

namespace detail {

inline bool is_cycle_in(const SimpleGraph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 3) return false;
  VertexSet seen = 0;
  for (int v : cyc) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

/// Shortest v -> u path avoiding the edge uv, BFS in increasing label order.
inline std::vector<int> cycle_through_edge(const SimpleGraph& g, int u, int v) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  parent[static_cast<std::size_t>(v)] = v;
  q.push(v);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : members(g.neighbors(a))) {
      if (a == v && b == u) continue;
      if (parent[static_cast<std::size_t>(b)] >= 0) continue;
      parent[static_cast<std::size_t>(b)] = a;
      if (b == u) {
        std::vector<int> path;
        for (int c = u; c != v; c = parent[static_cast<std::size_t>(c)]) path.push_back(c);
        path.push_back(v);
        // path = u ... v; as a cycle u, v, ..., back to u
        std::reverse(path.begin(), path.end());  // v ... u
        std::vector<int> cyc{u};
        cyc.insert(cyc.end(), path.begin(), path.end() - 1);
        return cyc;
      }
      q.push(b);
    }
  }
  return {};
}

struct EdgeUse {
  std::vector<VertexSet> used;
  explicit EdgeUse(int n) : used(static_cast<std::size_t>(n), 0) {}
  bool has(int a, int b) const { return (used[static_cast<std::size_t>(a)] >> b) & 1u; }
  void mark(int a, int b) {
    used[static_cast<std::size_t>(a)] |= bit(b);
    used[static_cast<std::size_t>(b)] |= bit(a);
  }
};

}  // namespace detail

/// Ear decomposition of a 2-connected graph.
///
/// Without an initial cycle, the cycle is the shortest one through the edge
/// from vertex 0 to its smallest neighbor. Ears are chosen deterministically:
/// the smallest attachment vertex s in the current structure, then its
/// smallest unused edge s-w, completed by a shortest path through new vertices
/// back to the structure (a chord when w is already in it).
///
/// Throws NotBiconnected, or NotACycle for an invalid initial cycle.
inline EarDecomposition ear_decomposition(const SimpleGraph& g, std::optional<std::vector<int>> initial_cycle = {}) {
  if (!is_2_connected(g)) throw Error(Errc::not_biconnected, "ear decomposition requires a 2-connected graph");
  EarDecomposition d;
  if (initial_cycle) {
    if (!detail::is_cycle_in(g, *initial_cycle)) throw Error(Errc::not_a_cycle, "initial cycle is not a cycle of the graph");
    d.initial_cycle = *initial_cycle;
  } else {
    d.initial_cycle = detail::cycle_through_edge(g, 0, lowest(g.neighbors(0)));
  }

  detail::EdgeUse use(g.order());
  VertexSet built = 0;
  const auto& cyc = d.initial_cycle;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    built |= bit(cyc[i]);
    use.mark(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  int remaining = g.size() - static_cast<int>(cyc.size());

  while (remaining > 0) {
    std::vector<int> ear;
    for (int s : members(built)) {
      for (int w : members(g.neighbors(s))) {
        if (use.has(s, w)) continue;
        if (built & bit(w)) {
          ear = {s, w};
          break;
        }
        // BFS through new vertices from w to the structure minus s.
        std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
        std::queue<int> q;
        parent[static_cast<std::size_t>(w)] = w;
        q.push(w);
        int hit_from = -1, hit = -1;
        while (!q.empty() && hit < 0) {
          int a = q.front();
          q.pop();
          VertexSet targets = g.neighbors(a) & built & ~bit(s);
          if (targets) {
            hit_from = a;
            hit = lowest(targets);
            break;
          }
          for (int b : members(g.neighbors(a) & ~built)) {
            if (parent[static_cast<std::size_t>(b)] >= 0) continue;
            parent[static_cast<std::size_t>(b)] = a;
            q.push(b);
          }
        }
        if (hit < 0) continue;
        std::vector<int> inner;
        for (int c = hit_from; c != w; c = parent[static_cast<std::size_t>(c)]) inner.push_back(c);
        inner.push_back(w);
        std::reverse(inner.begin(), inner.end());
        ear.push_back(s);
        ear.insert(ear.end(), inner.begin(), inner.end());
        ear.push_back(hit);
        break;
      }
      if (!ear.empty()) break;
    }
    if (ear.empty()) throw Error(Errc::invalid_decomposition, "no ear available; graph is not 2-connected");
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) use.mark(ear[i], ear[i + 1]);
    for (int v : ear) built |= bit(v);
    remaining -= static_cast<int>(ear.size()) - 1;
    d.ears.push_back(std::move(ear));
  }
  return d;
}

/// Checks every structural invariant of `d` against `g`: valid initial cycle;
/// each ear has distinct endpoints in the structure built so far, new distinct
/// internal vertices, and only unused graph edges; every edge and vertex of g
/// is covered exactly once.
inline bool is_valid_ear_decomposition(const SimpleGraph& g, const EarDecomposition& d) {
  if (!detail::is_cycle_in(g, d.initial_cycle)) return false;
  detail::EdgeUse use(g.order());
  VertexSet built = 0;
  int edges = 0;
  const auto& cyc = d.initial_cycle;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    built |= bit(cyc[i]);
    use.mark(cyc[i], cyc[(i + 1) % cyc.size()]);
    ++edges;
  }
  for (const auto& ear : d.ears) {
    if (ear.size() < 2) return false;
    const int a = ear.front(), b = ear.back();
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b) return false;
    if (!(built & bit(a)) || !(built & bit(b))) return false;
    VertexSet inner = 0;
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
      int v = ear[i];
      if (v < 0 || v >= g.order() || (built & bit(v)) || (inner & bit(v))) return false;
      inner |= bit(v);
    }
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      if (!g.has_edge(ear[i], ear[i + 1]) || use.has(ear[i], ear[i + 1])) return false;
      use.mark(ear[i], ear[i + 1]);
      ++edges;
    }
    built |= inner;
  }
  return edges == g.size() && built == g.vertices();
}

/// The graph on n vertices formed by the union of all elements.
inline SimpleGraph reconstruct(int n, const EarDecomposition& d) {
  std::vector<Edge> edges;
  const auto& cyc = d.initial_cycle;
  for (std::size_t i = 0; i < cyc.size(); ++i) edges.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
  for (const auto& ear : d.ears)
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) edges.emplace_back(ear[i], ear[i + 1]);
  return SimpleGraph::from_edge_list(n, edges);
}

/// The 2-connected closure of one boundary ear.
struct Block {
  /// Index into EarDecomposition::ears of the boundary ear.
  int boundary_ear = -1;
  VertexSet vertices = 0;
  /// Sorted edge list, including the closing edge between the boundary's
  /// endpoints.
  std::vector<Edge> edges;
  /// Ears absorbed after the boundary, in absorption order.
  std::vector<int> absorbed;
  /// Whether the closing edge is an edge of the host graph.
  bool closing_edge_in_graph = true;

  /// The block as a graph on its own vertices, relabeled in increasing order.
  SimpleGraph as_graph() const {
    std::vector<int> old = members(vertices);
    std::vector<int> pos(64, -1);
    for (std::size_t i = 0; i < old.size(); ++i) pos[static_cast<std::size_t>(old[i])] = static_cast<int>(i);
    std::vector<Edge> relabeled;
    for (auto [u, v] : edges) relabeled.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return SimpleGraph::from_edge_list(static_cast<int>(old.size()), relabeled);
  }
};

struct BlockSet {
  std::vector<Block> blocks;
};

/// Blocks bounded by ears. The base structure G0 is the vertex set of the
/// initial cycle; a boundary is any ear of length >= 2 with both endpoints in
/// G0. Starting from the boundary closed into a cycle, every other ear whose
/// two endpoints lie in the current block is absorbed, repeatedly, until a
/// fixpoint. Boundaries that produce the same block are reported once, under
/// the earliest boundary.
///
/// Throws InvalidDecomposition when `d` is not valid for `g`.
inline BlockSet blocks_bounded_by_ears(const SimpleGraph& g, const EarDecomposition& d) {
  if (!is_valid_ear_decomposition(g, d)) throw Error(Errc::invalid_decomposition, "decomposition does not match the graph");
  VertexSet base = 0;
  for (int v : d.initial_cycle) base |= bit(v);

  BlockSet out;
  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const auto& q = d.ears[i];
    if (q.size() < 3) continue;
    const int u = q.front(), v = q.back();
    if (!(base & bit(u)) || !(base & bit(v))) continue;

    Block b;
    b.boundary_ear = static_cast<int>(i);
    b.closing_edge_in_graph = g.has_edge(u, v);
    std::set<Edge> edges{{std::min(u, v), std::max(u, v)}};
    for (int w : q) b.vertices |= bit(w);
    for (std::size_t k = 0; k + 1 < q.size(); ++k) edges.insert({std::min(q[k], q[k + 1]), std::max(q[k], q[k + 1])});

    std::vector<bool> taken(d.ears.size(), false);
    taken[i] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < d.ears.size(); ++j) {
        if (taken[j]) continue;
        const auto& e = d.ears[j];
        if (!(b.vertices & bit(e.front())) || !(b.vertices & bit(e.back()))) continue;
        taken[j] = true;
        grew = true;
        b.absorbed.push_back(static_cast<int>(j));
        for (int w : e) b.vertices |= bit(w);
        for (std::size_t k = 0; k + 1 < e.size(); ++k) edges.insert({std::min(e[k], e[k + 1]), std::max(e[k], e[k + 1])});
      }
    }
    b.edges.assign(edges.begin(), edges.end());
    bool duplicate = std::any_of(out.blocks.begin(), out.blocks.end(), [&](const Block& o) {
      return o.vertices == b.vertices && o.edges == b.edges;
    });
    if (!duplicate) out.blocks.push_back(std::move(b));
  }
  return out;
}

/// Ears Q_i (i after the first boundary Q_1 = u..v) with one endpoint internal
/// to Q_1 and the other in V(G0) - {u, v}. Read literally: an endpoint equal
/// to u or v does not count as internal. Empty when there is no boundary.
inline std::vector<int> psi_ears(const EarDecomposition& d) {
  VertexSet base = 0;
  for (int v : d.initial_cycle) base |= bit(v);
  std::size_t first = d.ears.size();
  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const auto& q = d.ears[i];
    if (q.size() >= 3 && (base & bit(q.front())) && (base & bit(q.back()))) {
      first = i;
      break;
    }
  }
  std::vector<int> out;
  if (first == d.ears.size()) return out;
  const auto& q1 = d.ears[first];
  VertexSet inner = 0;
  for (std::size_t k = 1; k + 1 < q1.size(); ++k) inner |= bit(q1[k]);
  const VertexSet rest = base & ~bit(q1.front()) & ~bit(q1.back());
  for (std::size_t i = first + 1; i < d.ears.size(); ++i) {
    const int a = d.ears[i].front(), b = d.ears[i].back();
    if (((inner & bit(a)) && (rest & bit(b))) || ((inner & bit(b)) && (rest & bit(a)))) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace chromax
