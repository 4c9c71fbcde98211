#pragma once

// Chromatic polynomials by reduction rules:
//   clique gluing      P(G u H) = P(G) P(H) / P(K_r)     when G n H = K_r
//   dominated vertex   P(G, x) = x P(G - u, x - 1)        when deg(u) = n - 1
//   addition-contract  P(G) = P(G + uv) + P(G / uv)       for uv not an edge
//   deletion-contract  P(G) = P(G - uv) - P(G / uv)       for uv an edge
//   closure expansion  P(G) = P(G_{u1..ut,u}) + sum_j P(G_{u1..u(j-1),u} / uj u)
//                      where {u1..ut} are the non-neighbors of u
// with closed forms for cliques, cycles and trees. Every reduction is
// recorded in a pre-order trace that can be replayed independently.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromax/graph.hpp"
#include "chromax/invariants.hpp"
#include "chromax/isomorphism.hpp"
#include "chromax/polyalg.hpp"

namespace chromax {

inline constexpr int kMaxChromaticOrder = 16;
inline constexpr int kMaxMemoOrder = 10;
inline constexpr int kMaxGlueSeparator = 4;

enum class Strategy { automatic, pure_delete_contract, closure_first };

inline const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::pure_delete_contract: return "pure_delete_contract";
    case Strategy::closure_first: return "closure_first";
  }
  return "?";
}

inline Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::automatic;
  if (s == "pure_delete_contract" || s == "pure") return Strategy::pure_delete_contract;
  if (s == "closure_first" || s == "closure") return Strategy::closure_first;
  throw Error(Errc::invalid_params, "unknown strategy '" + s + "'");
}

enum class Rule {
  base_clique,
  base_cycle,
  base_tree,
  clique_glue,
  dominated_vertex,
  delete_contract,
  closure_expansion,
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::base_clique: return "base_clique";
    case Rule::base_cycle: return "base_cycle";
    case Rule::base_tree: return "base_tree";
    case Rule::clique_glue: return "clique_glue";
    case Rule::dominated_vertex: return "dominated_vertex";
    case Rule::delete_contract: return "delete_contract";
    case Rule::closure_expansion: return "closure_expansion";
  }
  return "?";
}

struct TraceStep {
  Rule rule = Rule::base_clique;
  int n = 0;  // order of the subproblem this rule was applied to
  int m = 0;  // its edge count
  int u = -1;
  int v = -1;
  /// delete_contract: true for the addition form (u, v non-adjacent).
  bool addition = true;
  /// clique_glue: the separating clique (r = |separator|; r = 0 splits
  /// components) and the first side, which includes the separator.
  VertexSet separator = 0;
  VertexSet side = 0;

  int r() const { return popcount(separator); }
};

/// Pre-order list of applied rules; children of a step follow it in the order
/// the rule defines them.
struct ReductionTrace {
  std::vector<TraceStep> steps;
};

struct ChromaticResult {
  IntPoly poly;
  ReductionTrace trace;
};

/// Canonical-form keyed cache of chromatic polynomials. Concurrent inserts of
/// the same key are idempotent.
class PolyMemo {
 public:
  std::optional<IntPoly> find(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, const IntPoly& p) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, p);
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, IntPoly> map_;
};

// ---------------------------------------------------------------------------
// Closed forms

/// (x - 1)^n + (-1)^n (x - 1).
inline IntPoly cycle_polynomial(int n) {
  const IntPoly xm1 = IntPoly::x_minus(1);
  return pow(xm1, static_cast<unsigned>(n)) + xm1 * BigInt(n % 2 == 0 ? 1 : -1);
}

/// x (x - 1)^(n - 1) for a tree on n >= 1 vertices.
inline IntPoly tree_polynomial(int n) {
  return IntPoly::x() * pow(IntPoly::x_minus(1), static_cast<unsigned>(n - 1));
}

/// x * p(x - 1).
inline IntPoly dominated_lift(const IntPoly& p) { return IntPoly::x() * compose_shift(p, BigInt(-1)); }

namespace detail {

inline bool is_cycle_graph(const SimpleGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

/// Smallest clique separator of size <= kMaxGlueSeparator, by size then mask.
inline std::optional<VertexSet> find_clique_separator(const SimpleGraph& g) {
  const int n = g.order();
  if (VertexSet cut = articulation_points(g)) return bit(lowest(cut));
  std::optional<VertexSet> found;
  std::function<void(VertexSet, VertexSet, int)> grow = [&](VertexSet clique, VertexSet cand, int want) {
    if (found) return;
    if (popcount(clique) == want) {
      if (separates(g, clique)) found = clique;
      return;
    }
    for (int v : members(cand)) {
      grow(clique | bit(v), cand & g.neighbors(v) & ~all_vertices(v + 1), want);
      if (found) return;
    }
  };
  for (int r = 2; r <= kMaxGlueSeparator && r <= n - 2; ++r) {
    grow(0, g.vertices(), r);
    if (found) return found;
  }
  return std::nullopt;
}

/// Non-adjacent (or adjacent, per `adjacent`) pair with the most common
/// neighbors; ties go to the lexicographically smallest pair.
inline std::optional<Edge> pivot_pair(const SimpleGraph& g, bool adjacent) {
  std::optional<Edge> best;
  int best_common = -1;
  for (int u = 0; u < g.order(); ++u) {
    VertexSet others = (adjacent ? g.neighbors(u) : ~g.neighbors(u)) & g.vertices() & ~all_vertices(u + 1);
    for (int v : members(others)) {
      int common = popcount(g.neighbors(u) & g.neighbors(v));
      if (common > best_common) {
        best_common = common;
        best = Edge{u, v};
      }
    }
  }
  return best;
}

inline int max_degree_vertex(const SimpleGraph& g) {
  int best = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

inline int universal_vertex(const SimpleGraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return v;
  return -1;
}

inline TraceStep make_step(const SimpleGraph& g, Rule rule) {
  TraceStep s;
  s.rule = rule;
  s.n = g.order();
  s.m = g.size();
  return s;
}

inline TraceStep pick_step(const SimpleGraph& g, Strategy strategy) {
  const int n = g.order();
  if (n == 0 || g.is_complete()) return make_step(g, Rule::base_clique);

  if (strategy == Strategy::pure_delete_contract) {
    TraceStep s = make_step(g, Rule::delete_contract);
    auto [u, v] = *pivot_pair(g, false);
    s.u = u;
    s.v = v;
    s.addition = true;
    return s;
  }

  if (strategy == Strategy::closure_first) {
    const int u = max_degree_vertex(g);
    TraceStep s = make_step(g, g.degree(u) == n - 1 ? Rule::dominated_vertex : Rule::closure_expansion);
    s.u = u;
    return s;
  }

  auto comps = components(g);
  if (comps.size() > 1) {
    TraceStep s = make_step(g, Rule::clique_glue);
    s.side = comps.front();
    return s;
  }
  if (is_cycle_graph(g)) return make_step(g, Rule::base_cycle);
  if (g.size() == n - 1) return make_step(g, Rule::base_tree);
  if (auto sep = find_clique_separator(g)) {
    TraceStep s = make_step(g, Rule::clique_glue);
    s.separator = *sep;
    s.side = components(g, g.vertices() & ~*sep).front() | *sep;
    return s;
  }
  if (int u = universal_vertex(g); u >= 0) {
    TraceStep s = make_step(g, Rule::dominated_vertex);
    s.u = u;
    return s;
  }
  TraceStep s = make_step(g, Rule::delete_contract);
  const bool dense = 4 * g.size() >= n * (n - 1);
  auto [u, v] = *pivot_pair(g, !dense);
  s.u = u;
  s.v = v;
  s.addition = dense;
  return s;
}

inline void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_params, std::string("trace step does not apply: ") + what);
}

/// Subproblems of a step, validating that the step applies to g.
inline std::vector<SimpleGraph> expand(const SimpleGraph& g, const TraceStep& s) {
  const int n = g.order();
  require(s.n == n && s.m == g.size(), "subproblem size mismatch");
  switch (s.rule) {
    case Rule::base_clique:
      require(g.is_complete(), "base_clique on a non-complete graph");
      return {};
    case Rule::base_cycle:
      require(is_cycle_graph(g), "base_cycle on a non-cycle");
      return {};
    case Rule::base_tree:
      require(n >= 1 && is_connected(g) && g.size() == n - 1, "base_tree on a non-tree");
      return {};
    case Rule::clique_glue: {
      const VertexSet sep = s.separator, side = s.side;
      require((side & sep) == sep && (side & ~g.vertices()) == 0, "glue masks out of range");
      require(g.is_clique(sep), "separator is not a clique");
      const VertexSet a = side & ~sep, b = g.vertices() & ~side;
      require(a != 0 && b != 0, "glue side is empty");
      for (int v : members(a)) require((g.neighbors(v) & b) == 0, "separator does not separate");
      return {g.induced(side), g.induced(g.vertices() & ~a)};
    }
    case Rule::dominated_vertex:
      require(s.u >= 0 && s.u < n && g.degree(s.u) == n - 1, "vertex is not dominating");
      return {g.delete_vertex(s.u)};
    case Rule::delete_contract:
      require(s.u >= 0 && s.v >= 0 && s.u < n && s.v < n && s.u != s.v, "bad pivot");
      require(g.has_edge(s.u, s.v) != s.addition, "pivot adjacency does not match the rule form");
      if (s.addition) return {g.add_edge(s.u, s.v), g.contract(s.u, s.v)};
      return {g.remove_edge(s.u, s.v), g.contract(s.u, s.v)};
    case Rule::closure_expansion: {
      require(s.u >= 0 && s.u < n, "bad vertex");
      const int u = s.u;
      const std::vector<int> outside = members(g.vertices() & ~g.neighbors(u) & ~bit(u));
      require(!outside.empty(), "closure expansion needs a non-neighbor");
      std::vector<SimpleGraph> out;
      SimpleGraph closed = g;
      for (int w : outside) closed = closed.add_edge(w, u);
      out.push_back(closed);
      SimpleGraph partial = g;
      for (int w : outside) {
        out.push_back(partial.contract(w, u));
        partial = partial.add_edge(w, u);
      }
      return out;
    }
  }
  return {};
}

inline IntPoly combine(const SimpleGraph& g, const TraceStep& s, const std::vector<IntPoly>& parts) {
  const int n = g.order();
  switch (s.rule) {
    case Rule::base_clique: return falling_factorial(static_cast<unsigned>(n));
    case Rule::base_cycle: return cycle_polynomial(n);
    case Rule::base_tree: return tree_polynomial(n);
    case Rule::clique_glue:
      return div_exact(parts[0] * parts[1], falling_factorial(static_cast<unsigned>(s.r())));
    case Rule::dominated_vertex: return dominated_lift(parts[0]);
    case Rule::delete_contract: return s.addition ? parts[0] + parts[1] : parts[0] - parts[1];
    case Rule::closure_expansion: {
      IntPoly sum;
      for (const auto& p : parts) sum += p;
      return sum;
    }
  }
  return {};
}

struct Engine {
  Strategy strategy;
  ReductionTrace* trace;
  PolyMemo* memo;

  IntPoly solve(const SimpleGraph& g) {
    std::string key;
    const bool use_memo = memo && !trace && g.order() >= 4 && g.order() <= kMaxMemoOrder;
    if (use_memo) {
      key = canonical_form(g);
      if (auto hit = memo->find(key)) return *hit;
    }
    TraceStep step = pick_step(g, strategy);
    if (trace) trace->steps.push_back(step);
    std::vector<IntPoly> parts;
    for (const auto& child : expand(g, step)) parts.push_back(solve(child));
    IntPoly p = combine(g, step, parts);
    if (use_memo) memo->insert(key, p);
    return p;
  }
};

struct Replayer {
  const ReductionTrace& trace;
  std::size_t next = 0;

  IntPoly solve(const SimpleGraph& g) {
    require(next < trace.steps.size(), "trace exhausted");
    const TraceStep& step = trace.steps[next++];
    std::vector<IntPoly> parts;
    for (const auto& child : expand(g, step)) parts.push_back(solve(child));
    return combine(g, step, parts);
  }
};

inline void check_order(const SimpleGraph& g) {
  if (g.order() > kMaxChromaticOrder)
    throw Error(Errc::too_large, "chromatic polynomial supports n <= " + std::to_string(kMaxChromaticOrder));
}

}  // namespace detail

/// Exact chromatic polynomial together with the reductions that produced it.
inline ChromaticResult chromatic_polynomial(const SimpleGraph& g, Strategy strategy = Strategy::automatic) {
  detail::check_order(g);
  ChromaticResult r;
  detail::Engine e{strategy, &r.trace, nullptr};
  r.poly = e.solve(g);
  return r;
}

/// Automatic strategy without a trace; subproblems with 4..10 vertices are
/// cached by canonical form in `memo` when one is given.
inline IntPoly chromatic_polynomial_value(const SimpleGraph& g, PolyMemo* memo = nullptr) {
  detail::check_order(g);
  detail::Engine e{Strategy::automatic, nullptr, memo};
  return e.solve(g);
}

/// Re-run a trace on g, validating every step; throws InvalidParams when a
/// step does not apply or the trace has leftover steps.
inline IntPoly replay_trace(const SimpleGraph& g, const ReductionTrace& trace) {
  detail::Replayer r{trace};
  IntPoly p = r.solve(g);
  detail::require(r.next == trace.steps.size(), "trailing trace steps");
  return p;
}

inline nlohmann::json to_json(const ReductionTrace& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : t.steps) {
    nlohmann::json j{{"rule", rule_name(s.rule)}, {"n", s.n}, {"m", s.m}};
    switch (s.rule) {
      case Rule::clique_glue:
        j["r"] = s.r();
        j["separator"] = members(s.separator);
        j["side"] = members(s.side);
        break;
      case Rule::dominated_vertex:
      case Rule::closure_expansion: j["u"] = s.u; break;
      case Rule::delete_contract:
        j["u"] = s.u;
        j["v"] = s.v;
        j["form"] = s.addition ? "addition" : "deletion";
        break;
      default: break;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Independent oracles

inline constexpr int kMaxBruteOrder = 12;
inline constexpr int kMaxInterpolationOrder = 9;

/// Number of proper colorings with x colors, by exhaustive backtracking over
/// assignments in vertex order.
inline BigInt count_colorings_brute(const SimpleGraph& g, long long x) {
  const int n = g.order();
  if (n > kMaxBruteOrder) throw Error(Errc::too_large, "brute-force counting supports n <= 12");
  if (x < 0) throw Error(Errc::invalid_params, "color count must be nonnegative");
  if (n == 0) return 1;
  if (x == 0) return 0;
  std::vector<long long> color(static_cast<std::size_t>(n), -1);
  BigInt total = 0;
  std::function<void(int)> go = [&](int v) {
    const VertexSet earlier = g.neighbors(v) & all_vertices(v);
    if (v == n - 1) {
      std::vector<long long> used;
      for (int w : members(earlier)) used.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      total += x - static_cast<long long>(used.size());
      return;
    }
    for (long long c = 0; c < x; ++c) {
      bool ok = true;
      for (int w : members(earlier))
        if (color[static_cast<std::size_t>(w)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      go(v + 1);
    }
    color[static_cast<std::size_t>(v)] = -1;
  };
  go(0);
  return total;
}

/// The degree-n polynomial through (x, count_colorings_brute(g, x)) for
/// x = 0..n, by exact Lagrange interpolation over the rationals. Throws
/// NonIntegerCoefficient if any coefficient is not an integer.
inline IntPoly interpolate_chromatic(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kMaxInterpolationOrder) throw Error(Errc::too_large, "interpolation oracle supports n <= 9");
  std::vector<Rational> ys;
  for (int x = 0; x <= n; ++x) ys.emplace_back(count_colorings_brute(g, x));
  std::vector<Rational> acc(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i = 0; i <= n; ++i) {
    // basis_i(x) = prod_{j != i} (x - j) / (i - j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * j;
      }
      basis = std::move(next);
      denom *= (i - j);
    }
    Rational scale = ys[static_cast<std::size_t>(i)] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : acc) {
    if (denominator(c) != 1) throw Error(Errc::non_integer_coefficient, "interpolated coefficient " + c.str());
    coeffs.push_back(numerator(c));
  }
  return IntPoly(std::move(coeffs));
}

/// Proper x-colorings of the path P_t with both endpoint colors fixed (equal
/// or distinct), by transfer along the path.
inline BigInt path_fixed_endpoint_colorings(int t, long long x, bool endpoints_equal) {
  if (t < 2 || x < 1) throw Error(Errc::invalid_params, "requires t >= 2 and x >= 1");
  if (!endpoints_equal && x < 2) return 0;
  // same: colorings of v_1..v_i with c(v_i) = c(v_1); other: c(v_i) = a fixed other color
  BigInt same = 1, other = 0;
  for (int i = 1; i < t; ++i) {
    BigInt next_same = other * (x - 1);
    BigInt next_other = same + other * (x - 2);
    same = std::move(next_same);
    other = std::move(next_other);
  }
  return endpoints_equal ? same : other;
}

}  // namespace chromax
