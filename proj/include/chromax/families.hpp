#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chromax/graph.hpp"
#include "chromax/polyalg.hpp"

namespace chromax {

inline SimpleGraph complete(int n) {
  if (n < 1) throw Error(Errc::invalid_params, "complete(n) requires n >= 1");
  SimpleGraph g(n);
  return g.complement();
}

inline SimpleGraph path(int n) {
  if (n < 1) throw Error(Errc::invalid_params, "path(n) requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edge_list(n, e);
}

inline SimpleGraph cycle(int n) {
  if (n < 3) throw Error(Errc::invalid_params, "cycle(n) requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edge_list(n, e);
}

/// Parts {0..m-1} and {m..m+n-1}.
inline SimpleGraph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_params, "complete_bipartite(m, n) requires m, n >= 1");
  std::vector<Edge> e;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) e.emplace_back(a, m + b);
  return from_edge_list(m + n, e);
}

/// Hub 0 joined to every vertex of the rim cycle 1..n.
inline SimpleGraph wheel(int n) {
  if (n < 3) throw Error(Errc::invalid_params, "wheel(n) requires a rim of n >= 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(0, 1 + i);
    e.emplace_back(1 + i, 1 + (i + 1) % n);
  }
  return from_edge_list(n + 1, e);
}

/// K_k on 0..k-1 plus an ear 0 - k - (k+1) - ... - (n-1) - 1.
inline SimpleGraph g_nk(int n, int k) {
  if (k < 3 || n < k) throw Error(Errc::invalid_params, "g_nk(n, k) requires n >= k >= 3");
  std::vector<Edge> e;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) e.emplace_back(a, b);
  if (n > k) {
    int prev = 0;
    for (int v = k; v < n; ++v) {
      e.emplace_back(prev, v);
      prev = v;
    }
    e.emplace_back(prev, 1);
  }
  return from_edge_list(n, e);
}

struct Invariants {
  int chi = 0;
  int omega = 0;
  int alpha = 0;
  int kappa = 0;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

struct Fixture {
  std::string name;
  SimpleGraph graph;
  std::optional<IntPoly> expected_poly;
  std::optional<Invariants> expected_invariants;
  std::string provenance;
};

namespace detail {

inline IntPoly xm(long long c) { return IntPoly::x_minus(BigInt(c)); }

/// (x-1)_3 * (x^4 + a x^3 + b x^2 + c x)
inline IntPoly t_family_poly(long long a, long long b, long long c) {
  return falling_factorial(3, 1) * IntPoly{0, c, b, a, 1};
}

inline Fixture fig2_gprime() {
  // v1..v4 = 0..3, x = 4, y = 5
  return {"fig2_Gprime",
          from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {0, 5}, {3, 5}, {3, 0}}),
          IntPoly::x() * xm(1) * pow(xm(2), 2) * IntPoly{4, -3, 1},
          std::nullopt,
          "figure 2, subgraph G' (v1..v4 = 0..3, x = 4, y = 5)"};
}

inline Fixture fig4_g0() {
  // triangle a, b, c = 0, 1, 2; u = 3; v = 4; right pair r1, r2 = 5, 6
  const IntPoly y = xm(1);
  return {"fig4_G0",
          from_edge_list(7, {{0, 1}, {2, 0}, {1, 2}, {4, 1}, {3, 0}, {2, 4}, {4, 5}, {4, 6}, {3, 5}, {3, 6}, {5, 6}}),
          falling_factorial(3, 1) * (pow(y, 4) - y * IntPoly{1, -3, 1} - IntPoly::constant(2)),
          std::nullopt,
          "figure 4, subgraph G0 (a, b, c = 0, 1, 2; u = 3; v = 4; right pair = 5, 6)"};
}

// Triangle 1, 2, 3 = 0, 1, 2; u = 3; w = 4; v = 5; vertex 4 of the drawing = 6.
inline std::vector<Edge> t1_edges() {
  return {{0, 1}, {1, 2}, {3, 0}, {4, 0}, {1, 5}, {5, 2}, {5, 6}, {3, 6}, {4, 6}, {0, 2}, {3, 4}};
}

inline Fixture fig5_t1() {
  return {"fig5_T1", from_edge_list(7, t1_edges()), t_family_poly(-5, 10, -8), Invariants{4, 3, 2, 2},
          "figure 5, T1 (1, 2, 3 = 0, 1, 2; u = 3; w = 4; v = 5; 4 = 6)"};
}

inline Fixture fig5_t2() {
  auto e = t1_edges();
  e.emplace_back(4, 1);
  return {"fig5_T2", from_edge_list(7, e), t_family_poly(-6, 14, -13), Invariants{4, 3, 2, 3},
          "figure 5, T2 (T1 plus w2)"};
}

inline Fixture fig5_t3() {
  auto e = t1_edges();
  e.emplace_back(3, 1);
  e.emplace_back(4, 2);
  return {"fig5_T3", from_edge_list(7, e), t_family_poly(-7, 19, -20), Invariants{4, 3, 2, 3},
          "figure 5, T3 (T1 plus u2 and w3)"};
}

inline Fixture fig6() {
  // 1 = 0, 2 = 1, u = 2, w = 3, v = 4, 3 = 5, 4 = 6
  return {"fig6",
          from_edge_list(7, {{0, 1}, {6, 5}, {2, 3}, {2, 0}, {1, 2}, {3, 0}, {4, 0}, {4, 1}, {4, 6}, {3, 5}, {3, 6}, {2, 5}}),
          t_family_poly(-6, 14, -13),
          Invariants{4, 3, 2, 3},
          "figure 6 (1 = 0, 2 = 1, u = 2, w = 3, v = 4, 3 = 5, 4 = 6); isomorphic to T2"};
}

}  // namespace detail

inline const std::array<const char*, 6>& fixture_names() {
  static const std::array<const char*, 6> names{"fig2_Gprime", "fig4_G0", "fig5_T1", "fig5_T2", "fig5_T3", "fig6"};
  return names;
}

inline Fixture fixture(const std::string& name) {
  if (name == "fig2_Gprime") return detail::fig2_gprime();
  if (name == "fig4_G0") return detail::fig4_g0();
  if (name == "fig5_T1") return detail::fig5_t1();
  if (name == "fig5_T2") return detail::fig5_t2();
  if (name == "fig5_T3") return detail::fig5_t3();
  if (name == "fig6") return detail::fig6();
  throw Error(Errc::unknown_fixture, "no fixture named '" + name + "'");
}

inline std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  for (const char* n : fixture_names()) out.push_back(fixture(n));
  return out;
}

/// Build a named family member, e.g. ("g_nk", n, k) or ("cycle", n, 0).
inline SimpleGraph family(const std::string& name, int n, int k) {
  if (name == "complete") return complete(n);
  if (name == "cycle") return cycle(n);
  if (name == "path") return path(n);
  if (name == "wheel") return wheel(n);
  if (name == "complete_bipartite") return complete_bipartite(n, k);
  if (name == "g_nk") return g_nk(n, k);
  throw Error(Errc::invalid_params, "unknown family '" + name + "'");
}

}  // namespace chromax
