#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <vector>

#include "chromax/graph.hpp"

namespace chromax {

// ---------------------------------------------------------------------------
// Cliques

namespace detail {

inline void max_clique_search(const SimpleGraph& g, VertexSet r, VertexSet p, VertexSet x, VertexSet& best) {
  if (!p && !x) {
    if (popcount(r) > popcount(best)) best = r;
    return;
  }
  if (popcount(r) + popcount(p) <= popcount(best)) return;
  int pivot = -1, pivot_hits = -1;
  for (int u : members(p | x)) {
    int hits = popcount(p & g.neighbors(u));
    if (hits > pivot_hits) {
      pivot_hits = hits;
      pivot = u;
    }
  }
  for (int v : members(p & ~g.neighbors(pivot))) {
    max_clique_search(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), best);
    p &= ~bit(v);
    x |= bit(v);
  }
}

inline void maximal_cliques(const SimpleGraph& g, VertexSet r, VertexSet p, VertexSet x,
                            const std::function<void(VertexSet)>& fn) {
  if (!p && !x) {
    fn(r);
    return;
  }
  int pivot = lowest(p | x), pivot_hits = -1;
  for (int u : members(p | x)) {
    int hits = popcount(p & g.neighbors(u));
    if (hits > pivot_hits) {
      pivot_hits = hits;
      pivot = u;
    }
  }
  for (int v : members(p & ~g.neighbors(pivot))) {
    maximal_cliques(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), fn);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace detail

/// Bron-Kerbosch with pivoting; calls fn once per maximal clique.
inline void for_each_maximal_clique(const SimpleGraph& g, const std::function<void(VertexSet)>& fn) {
  if (g.order() == 0) return;
  detail::maximal_cliques(g, 0, g.vertices(), 0, fn);
}

inline VertexSet maximum_clique(const SimpleGraph& g) {
  VertexSet best = 0;
  if (g.order() > 0) detail::max_clique_search(g, 0, g.vertices(), 0, best);
  return best;
}

inline int clique_number(const SimpleGraph& g) { return popcount(maximum_clique(g)); }

inline int independence_number(const SimpleGraph& g) { return clique_number(g.complement()); }

// ---------------------------------------------------------------------------
// Coloring

namespace detail {

/// DSATUR greedy coloring; returns the number of colors used.
inline int dsatur_greedy(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(n), 0);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      int sat = popcount(seen[static_cast<std::size_t>(v)]);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = lowest(~seen[static_cast<std::size_t>(pick)]);
    color[static_cast<std::size_t>(pick)] = c;
    used = std::max(used, c + 1);
    for (int w : members(g.neighbors(pick))) seen[static_cast<std::size_t>(w)] |= bit(c);
  }
  return used;
}

struct ColoringSearch {
  const SimpleGraph& g;
  int k;
  std::vector<int> color;
  std::vector<std::uint64_t> forbidden;

  bool run(int colored, int used) {
    const int n = g.order();
    if (colored == n) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      int sat = popcount(forbidden[static_cast<std::size_t>(v)]);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    // Colors above `used` are interchangeable; try only the first fresh one.
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((forbidden[static_cast<std::size_t>(pick)] >> c) & 1u) continue;
      color[static_cast<std::size_t>(pick)] = c;
      std::vector<std::pair<int, std::uint64_t>> saved;
      for (int w : members(g.neighbors(pick))) {
        saved.emplace_back(w, forbidden[static_cast<std::size_t>(w)]);
        forbidden[static_cast<std::size_t>(w)] |= bit(c);
      }
      if (run(colored + 1, std::max(used, c + 1))) return true;
      for (auto [w, f] : saved) forbidden[static_cast<std::size_t>(w)] = f;
      color[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }
};

}  // namespace detail

inline bool is_k_colorable(const SimpleGraph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  detail::ColoringSearch s{g, k, std::vector<int>(static_cast<std::size_t>(g.order()), -1),
                           std::vector<std::uint64_t>(static_cast<std::size_t>(g.order()), 0)};
  return s.run(0, 0);
}

/// Exact chromatic number: clique lower bound, DSATUR upper bound, and a
/// DSATUR-ordered backtracking search in between.
inline int chromatic_number(const SimpleGraph& g) {
  if (g.order() == 0) return 0;
  const int lo = clique_number(g);
  const int hi = detail::dsatur_greedy(g);
  for (int k = lo; k < hi; ++k)
    if (is_k_colorable(g, k)) return k;
  return hi;
}

// ---------------------------------------------------------------------------
// Connectivity

/// Maximum number of internally vertex-disjoint s-t paths, for non-adjacent
/// s != t, by unit-capacity max-flow on the vertex-split graph.
inline int local_vertex_connectivity(const SimpleGraph& g, int s, int t) {
  const int n = g.order();
  // Node v_in = 2v, v_out = 2v + 1.
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  auto c = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int v = 0; v < n; ++v) c(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
  for (auto [u, v] : g.edges()) {
    c(2 * u + 1, 2 * v) = n;
    c(2 * v + 1, 2 * u) = n;
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  for (;;) {
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      int a = q.front();
      q.pop();
      for (int b = 0; b < nodes; ++b) {
        if (parent[static_cast<std::size_t>(b)] < 0 && c(a, b) > 0) {
          parent[static_cast<std::size_t>(b)] = a;
          q.push(b);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
      int a = parent[static_cast<std::size_t>(b)];
      c(a, b) -= 1;
      c(b, a) += 1;
    }
    ++flow;
  }
  return flow;
}

/// kappa(G). Complete graphs get n - 1; disconnected graphs and graphs on at
/// most one vertex get 0.
inline int vertex_connectivity(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t : members(g.vertices() & ~g.neighbors(s) & ~all_vertices(s + 1)))
      best = std::min(best, local_vertex_connectivity(g, s, t));
  return best;
}

/// Cut vertices by DFS low-points.
inline VertexSet articulation_points(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  VertexSet cut = 0;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    int children = 0;
    for (int w : members(g.neighbors(v))) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] >= 0) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      if (parent >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) cut |= bit(v);
    }
    if (parent < 0 && children > 1) cut |= bit(v);
  };
  for (int v = 0; v < n; ++v)
    if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
  return cut;
}

inline bool is_2_connected(const SimpleGraph& g) {
  return g.order() >= 3 && is_connected(g) && articulation_points(g) == 0;
}

/// Vertex set of the l-core: repeatedly strip vertices of degree < l.
inline VertexSet l_core_vertices(const SimpleGraph& g, int l) {
  VertexSet alive = g.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : members(alive)) {
      if (popcount(g.neighbors(v) & alive) < l) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

inline SimpleGraph l_core(const SimpleGraph& g, int l) {
  if (l < 0) throw Error(Errc::invalid_params, "l_core requires l >= 0");
  return g.induced(l_core_vertices(g, l));
}

/// Every vertex subset of size in [1, max_size] whose removal disconnects g,
/// in increasing order of size then mask.
inline std::vector<VertexSet> vertex_cuts(const SimpleGraph& g, int max_size) {
  std::vector<VertexSet> out;
  const int n = g.order();
  for (int size = 1; size <= max_size && size <= n - 2; ++size) {
    std::vector<VertexSet> level;
    // Gosper's hack over masks with `size` bits set.
    VertexSet s = all_vertices(size);
    const VertexSet limit = all_vertices(n);
    while (s <= limit && (s & ~limit) == 0) {
      if (separates(g, s)) level.push_back(s);
      const VertexSet c = s & (~s + 1);
      const VertexSet r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace chromax
