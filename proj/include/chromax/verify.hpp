#pragma once

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <numeric>
#include <vector>

#include "chromax/chrompoly.hpp"
#include "chromax/families.hpp"
#include "chromax/graph.hpp"
#include "chromax/graph6.hpp"
#include "chromax/invariants.hpp"
#include "chromax/isomorphism.hpp"
#include "chromax/polyalg.hpp"

namespace chromax {

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kMaxEnumerationOrder = 8;

using GraphPredicate = std::function<bool(const SimpleGraph&)>;

namespace detail {

/// One canonical representative per isomorphism class on n vertices, sorted by
/// canonical form. Built by adding a vertex with every possible neighborhood
/// to each class on n - 1 vertices; cached per order.
inline const std::vector<std::pair<std::string, SimpleGraph>>& classes_of_order(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<std::string, SimpleGraph>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache[0] = {{write_graph6(SimpleGraph(0)), SimpleGraph(0)}};
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<std::pair<std::string, SimpleGraph>> level;
  int have = 0;
  for (int m = n - 1; m >= 0; --m)
    if (auto it = cache.find(m); it != cache.end()) {
      level = it->second;
      have = m;
      break;
    }
  for (int m = have + 1; m <= n; ++m) {
    std::map<std::string, SimpleGraph> next;
    for (const auto& [key, g] : level) {
      std::vector<VertexSet> base = g.adjacency();
      base.push_back(0);
      for (VertexSet nb = 0; nb <= all_vertices(m - 1); ++nb) {
        std::vector<VertexSet> adj = base;
        adj.back() = nb;
        for (int w : members(nb)) adj[static_cast<std::size_t>(w)] |= bit(m - 1);
        SimpleGraph h = SimpleGraph::from_adjacency(std::move(adj));
        CanonicalLabeling c = canonical_labeling(h);
        std::string form = write_graph6(c.graph);
        next.emplace(std::move(form), std::move(c.graph));
      }
    }
    level.assign(next.begin(), next.end());
    cache.emplace(m, level);
  }
  return cache.at(n);
}

}  // namespace detail

/// One representative per isomorphism class on n vertices satisfying `pred`,
/// in canonical-form order. Representatives are canonically labeled.
inline std::vector<SimpleGraph> enumerate_graphs(int n, const GraphPredicate& pred = {}) {
  if (n < 0) throw Error(Errc::invalid_params, "enumerate_graphs requires n >= 0");
  if (n > kMaxEnumerationOrder) throw Error(Errc::too_large, "builtin enumeration supports n <= 8");
  std::vector<SimpleGraph> out;
  for (const auto& [key, g] : detail::classes_of_order(n))
    if (!pred || pred(g)) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Random corpora

/// G(n, p) conditioned on connectivity: a uniform random recursive spanning
/// tree plus each remaining pair independently with probability p.
template <class Rng>
SimpleGraph random_connected_graph(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  SimpleGraph g = from_edge_list(n, e);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng)) g = g.add_edge(u, v);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

template <class Rng>
SimpleGraph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g = g.add_edge(u, v);
  return g;
}

/// Rejection-sampled 2-connected graph on n >= 3 vertices.
template <class Rng>
SimpleGraph random_2_connected_graph(int n, double p, Rng& rng) {
  for (;;) {
    SimpleGraph g = random_connected_graph(n, p, rng);
    if (is_2_connected(g)) return g;
  }
}

// ---------------------------------------------------------------------------
// Bound reports

enum class BoundVerdict { strictly_below, equal, violates };

inline const char* verdict_name(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::strictly_below: return "strictly_below";
    case BoundVerdict::equal: return "equal";
    case BoundVerdict::violates: return "violates";
  }
  return "?";
}

struct BoundReport {
  std::string graph_id;
  int n = 0, k = 0, omega = 0, alpha = 0, kappa = 0;
  IntPoly poly;
  IntPoly bound;
  BoundVerdict verdict = BoundVerdict::strictly_below;
  bool equality_iso_ok = true;
  NonnegCertificate certificate;
  /// bound - poly >= 0 at every integer in [k, k + 32].
  bool integer_check_ok = true;
};

inline constexpr int kIntegerCheckSpan = 32;

inline std::string graph_id(const SimpleGraph& g) {
  return g.order() <= kMaxCanonicalOrder ? canonical_form(g) : write_graph6(g);
}

namespace detail {

inline BoundReport make_report(const SimpleGraph& g, int chi, const IntPoly& poly, IntPoly bound, const Rational& ray) {
  BoundReport r;
  r.graph_id = graph_id(g);
  r.n = g.order();
  r.k = chi;
  r.omega = clique_number(g);
  r.alpha = independence_number(g);
  r.kappa = vertex_connectivity(g);
  r.poly = poly;
  r.bound = std::move(bound);
  r.certificate = leq_on_ray(r.poly, r.bound, ray);
  if (r.certificate.verdict == Verdict::negative_at)
    r.verdict = BoundVerdict::violates;
  else if (r.certificate.identically_zero())
    r.verdict = BoundVerdict::equal;
  else
    r.verdict = BoundVerdict::strictly_below;
  const IntPoly diff = r.bound - r.poly;
  for (long long x = chi; x <= chi + kIntegerCheckSpan; ++x)
    if (eval(diff, x) < 0) r.integer_check_ok = false;
  return r;
}

inline void precondition(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::precondition_failed, what);
}

}  // namespace detail

/// P(g) against f_{n,k} on [ray, inf), ray defaulting to chi(g). With
/// `allow_n_eq_k`, n = k is accepted and compared with (x)_k.
inline BoundReport check_bound(const SimpleGraph& g, std::optional<Rational> ray = std::nullopt,
                               PolyMemo* memo = nullptr, bool allow_n_eq_k = false) {
  detail::precondition(is_2_connected(g), "graph is not 2-connected");
  const int chi = chromatic_number(g);
  detail::precondition(chi >= 4, "chromatic number " + std::to_string(chi) + " is below 4");
  detail::precondition(g.order() > chi || (allow_n_eq_k && g.order() == chi),
                       "order " + std::to_string(g.order()) + " does not exceed the chromatic number");
  BoundReport r = detail::make_report(g, chi, chromatic_polynomial_value(g, memo), f_bound(g.order(), chi),
                                      ray.value_or(Rational(chi)));
  const bool extremal = is_isomorphic(g, g_nk(g.order(), chi));
  r.equality_iso_ok = (r.verdict == BoundVerdict::equal) == extremal;
  return r;
}

/// P(g) against (x)_k (x-1)^(n-k) on [ray, inf); equality is expected exactly
/// when the 2-core of g is a k-clique.
inline BoundReport check_tomescu_bound(const SimpleGraph& g, std::optional<Rational> ray = std::nullopt,
                                       PolyMemo* memo = nullptr) {
  detail::precondition(g.order() >= 1 && is_connected(g), "graph is not connected");
  const int chi = chromatic_number(g);
  detail::precondition(chi >= 4, "chromatic number " + std::to_string(chi) + " is below 4");
  IntPoly bound = falling_factorial(static_cast<unsigned>(chi)) *
                  pow(IntPoly::x_minus(1), static_cast<unsigned>(g.order() - chi));
  BoundReport r = detail::make_report(g, chi, chromatic_polynomial_value(g, memo), std::move(bound),
                                      ray.value_or(Rational(chi)));
  const SimpleGraph core = l_core(g, 2);
  const bool core_is_clique = core.order() == chi && core.is_complete();
  r.equality_iso_ok = (r.verdict == BoundVerdict::equal) == core_is_clique;
  return r;
}

inline nlohmann::json to_json(const BoundReport& r) {
  return {{"graph6", r.graph_id},
          {"n", r.n},
          {"chi", r.k},
          {"omega", r.omega},
          {"alpha", r.alpha},
          {"kappa", r.kappa},
          {"verdict", verdict_name(r.verdict)},
          {"equality_iso_ok", r.equality_iso_ok},
          {"integer_check_ok", r.integer_check_ok},
          {"poly", to_json(r.poly)},
          {"bound", to_json(r.bound)},
          {"certificate", to_json(r.certificate)}};
}

// ---------------------------------------------------------------------------
// The three falling-factorial / power inequalities

struct InequalityCertificate {
  int k = 0;
  /// 1: (x-2)_k <= (x-1)^k - k (x-1)^(k-1)
  /// 2: (x-2)^k <= (x-1)^k - (x-1)^(k-1)
  /// 3: (x-2)^k <= (x-1)^k - k (x-1)^(k-1) + k(k-1)/2 (x-1)^(k-2)
  int inequality = 0;
  NonnegCertificate certificate;
};

inline std::pair<IntPoly, IntPoly> inequality_sides(int k, int which) {
  const IntPoly y = IntPoly::x_minus(1);
  const unsigned uk = static_cast<unsigned>(k);
  switch (which) {
    case 1: return {falling_factorial(uk, 2), pow(y, uk) - pow(y, uk - 1) * BigInt(k)};
    case 2: return {pow(IntPoly::x_minus(2), uk), pow(y, uk) - pow(y, uk - 1)};
    case 3:
      return {pow(IntPoly::x_minus(2), uk),
              pow(y, uk) - pow(y, uk - 1) * BigInt(k) + pow(y, uk - 2) * BigInt(k * (k - 1) / 2)};
    default: throw Error(Errc::invalid_params, "inequality index must be 1, 2 or 3");
  }
}

inline std::vector<InequalityCertificate> check_proposition_inequalities(int k_max, const Rational& ray_start = Rational(2)) {
  if (k_max < 2) throw Error(Errc::invalid_params, "k_max must be at least 2");
  std::vector<InequalityCertificate> out;
  for (int k = 2; k <= k_max; ++k)
    for (int which = 1; which <= 3; ++which) {
      auto [lhs, rhs] = inequality_sides(k, which);
      out.push_back({k, which, leq_on_ray(lhs, rhs, ray_start)});
    }
  return out;
}

/// Extra claim on inequality 3: difference zero iff k = 2, root-free on the
/// ray for k >= 3.
inline bool inequality3_shape_ok(const InequalityCertificate& c) {
  if (c.inequality != 3) return true;
  if (c.k == 2) return c.certificate.identically_zero();
  return !c.certificate.identically_zero() && c.certificate.root_free;
}

inline nlohmann::json to_json(const InequalityCertificate& c) {
  return {{"k", c.k}, {"inequality", c.inequality}, {"certificate", to_json(c.certificate)}};
}

// ---------------------------------------------------------------------------
// Structural audits over small cut-sets in graphs with independence number 2

struct LemmaAudit {
  /// stable_cut_le2: stable cut-set of size <= 2 in a connected graph.
  /// clique_cut_le2: clique cut-set of size <= 2 in a connected graph.
  /// nonclique_cut_3: non-clique 3-cut in a 3-connected graph.
  std::string lemma;
  bool hypothesis_met = false;
  bool conclusion_holds = true;
  int cuts_checked = 0;
  std::optional<VertexSet> failing_cut;
  std::string failed_item;
};

namespace detail {

struct CutSides {
  VertexSet g1 = 0, g2 = 0;  // g1 is the larger side
  std::size_t parts = 0;
};

inline CutSides sides(const SimpleGraph& g, VertexSet s) {
  auto comps = components(g, g.vertices() & ~s);
  CutSides c;
  c.parts = comps.size();
  if (comps.size() == 2) {
    c.g1 = comps[0];
    c.g2 = comps[1];
    if (popcount(c.g2) > popcount(c.g1)) std::swap(c.g1, c.g2);
  }
  return c;
}

/// Items shared by the stable-cut and non-clique-cut statements: exactly two
/// sides, both complete, and each cut vertex complete to one side. Sets
/// `failed` to the first failing item.
inline bool common_items(const SimpleGraph& g, VertexSet s, const CutSides& c, std::string& failed) {
  if (c.parts != 2) {
    failed = "(i) exactly two components";
    return false;
  }
  if (!g.is_clique(c.g1) || !g.is_clique(c.g2)) {
    failed = "(ii) both components complete";
    return false;
  }
  for (int u : members(s)) {
    if ((c.g1 & ~g.neighbors(u)) != 0 && (c.g2 & ~g.neighbors(u)) != 0) {
      failed = "(iii) cut vertex complete to one side";
      return false;
    }
  }
  return true;
}

inline bool stable_cut_items(const SimpleGraph& g, VertexSet s, int k, int omega, std::string& failed) {
  CutSides c = sides(g, s);
  if (!common_items(g, s, c, failed)) return false;
  if (std::max(popcount(c.g1), popcount(c.g2)) < k - 1) {
    failed = "(iv) a side with chromatic number >= k-1";
    return false;
  }
  if (popcount(s) == 2 && omega < k) {
    if (popcount(c.g1) != k - 1 || popcount(c.g2) != k - 2) {
      failed = "(v) sides K_{k-1} and K_{k-2}";
      return false;
    }
    const std::vector<int> sv = members(s);
    const VertexSet miss0 = c.g1 & ~g.neighbors(sv[0]);
    const VertexSet miss1 = c.g1 & ~g.neighbors(sv[1]);
    if (!miss0 || !miss1 || (miss0 & miss1) || (c.g2 & ~g.neighbors(sv[0])) || (c.g2 & ~g.neighbors(sv[1]))) {
      failed = "(vi) non-neighbor pattern of the cut";
      return false;
    }
  }
  return true;
}

inline bool nonclique_cut_items(const SimpleGraph& g, VertexSet s, int k, int omega, std::string& failed) {
  CutSides c = sides(g, s);
  if (!common_items(g, s, c, failed)) return false;
  const int p = popcount(c.g1), q = popcount(c.g2);
  if (p < k - 2) {
    failed = "(iv) a side with chromatic number >= k-2";
    return false;
  }
  if (omega < k && !((p == k - 1 && q == k - 3) || (p == k - 2 && q == k - 2))) {
    failed = "(v) sides K_{k-1}, K_{k-3} or K_{k-2}, K_{k-2}";
    return false;
  }
  return true;
}

}  // namespace detail

/// Audit the three cut-set statements on g. Cut-sets are enumerated
/// exhaustively up to size 3, or restricted to `only_cut` when given. A row
/// with hypothesis_met && !conclusion_holds is a counterexample.
inline std::vector<LemmaAudit> audit_structure_lemmas(const SimpleGraph& g, std::optional<VertexSet> only_cut = std::nullopt) {
  LemmaAudit stable, clique, nonclique;
  stable.lemma = "stable_cut_le2";
  clique.lemma = "clique_cut_le2";
  nonclique.lemma = "nonclique_cut_3";
  const bool base = g.order() >= 1 && is_connected(g) && independence_number(g) == 2;
  if (base) {
    const int k = chromatic_number(g);
    const int omega = clique_number(g);
    const bool three_connected = vertex_connectivity(g) >= 3;
    std::vector<VertexSet> cuts;
    if (only_cut) {
      if (separates(g, *only_cut)) cuts.push_back(*only_cut);
    } else {
      cuts = vertex_cuts(g, 3);
    }
    auto record = [](LemmaAudit& row, VertexSet s, bool ok, const std::string& failed) {
      row.hypothesis_met = true;
      ++row.cuts_checked;
      if (!ok && row.conclusion_holds) {
        row.conclusion_holds = false;
        row.failing_cut = s;
        row.failed_item = failed;
      }
    };
    for (VertexSet s : cuts) {
      const int size = popcount(s);
      std::string failed;
      if (size <= 2 && g.is_stable(s)) record(stable, s, detail::stable_cut_items(g, s, k, omega, failed), failed);
      if (size <= 2 && g.is_clique(s)) {
        const bool ok = omega == k;
        record(clique, s, ok, ok ? "" : "omega = k");
      }
      if (size == 3 && three_connected && !g.is_clique(s))
        record(nonclique, s, detail::nonclique_cut_items(g, s, k, omega, failed), failed);
    }
  }
  return {stable, clique, nonclique};
}

inline nlohmann::json to_json(const LemmaAudit& a) {
  nlohmann::json j{{"lemma", a.lemma},
                   {"hypothesis_met", a.hypothesis_met},
                   {"conclusion_holds", a.conclusion_holds},
                   {"cuts_checked", a.cuts_checked}};
  if (a.failing_cut) {
    j["failing_cut"] = members(*a.failing_cut);
    j["failed_item"] = a.failed_item;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Campaigns

enum class CampaignCheck { bound, tomescu };

struct CampaignConfig {
  int n_min = 4;
  int n_max = 7;
  /// Exact chromatic number to keep; every chi >= 4 when unset.
  std::optional<int> k;
  /// Minimum vertex connectivity: 1 = connected, 2 = 2-connected, 3 = 3-connected.
  int connectivity = 2;
  std::optional<int> alpha;
  std::optional<int> omega;
  /// Keep only graphs with omega < chi.
  bool omega_below_chi = false;
  /// Empty for the builtin enumeration, else a graph6 file with one record per line.
  std::string graph6_file;
  /// Ray start; chi(G) when unset.
  std::optional<Rational> ray_start;
  CampaignCheck check = CampaignCheck::bound;
  bool audit = false;
  /// Also report n = k graphs (compared with (x)_k) in bound campaigns.
  bool include_n_eq_k = false;
  std::string report_csv;
  std::string summary_json;
  int jobs = 1;
};

struct CampaignResult {
  std::vector<BoundReport> reports;
  std::vector<std::pair<std::string, LemmaAudit>> audit_failures;
  nlohmann::json summary;
  int violations = 0;
  int equality_failures = 0;
  int integer_check_failures = 0;

  bool ok() const { return violations == 0 && equality_failures == 0 && integer_check_failures == 0 && audit_failures.empty(); }
};

inline CampaignConfig campaign_config_from_json(const nlohmann::json& j) {
  CampaignConfig c;
  auto opt_int = [&](const char* key, std::optional<int>& dst) {
    if (j.contains(key) && !j[key].is_null()) dst = j[key].get<int>();
  };
  try {
    if (j.contains("n_range")) {
      c.n_min = j["n_range"].at(0).get<int>();
      c.n_max = j["n_range"].at(1).get<int>();
    }
    if (j.contains("n")) c.n_min = c.n_max = j["n"].get<int>();
    opt_int("k", c.k);
    opt_int("k_filter", c.k);
    opt_int("alpha", c.alpha);
    opt_int("alpha_filter", c.alpha);
    opt_int("omega", c.omega);
    opt_int("omega_filter", c.omega);
    if (j.contains("connectivity_filter")) c.connectivity = j["connectivity_filter"].get<int>();
    if (j.contains("connectivity")) c.connectivity = j["connectivity"].get<int>();
    if (j.contains("omega_below_chi")) c.omega_below_chi = j["omega_below_chi"].get<bool>();
    if (j.contains("source")) {
      const auto& s = j["source"];
      if (s.is_string() && s.get<std::string>() != "builtin") c.graph6_file = s.get<std::string>();
      if (s.is_object() && s.contains("graph6_file")) c.graph6_file = s["graph6_file"].get<std::string>();
    }
    if (j.contains("x_ray_start")) {
      const auto& r = j["x_ray_start"];
      if (!(r.is_string() && r.get<std::string>() == "at_chi"))
        c.ray_start = parse_rational(r.is_string() ? r.get<std::string>() : r.dump());
    }
    if (j.contains("check")) {
      std::string s = j["check"].get<std::string>();
      if (s == "bound") c.check = CampaignCheck::bound;
      else if (s == "tomescu") c.check = CampaignCheck::tomescu;
      else throw Error(Errc::parse_error, "unknown check '" + s + "'");
    }
    if (j.contains("audit")) c.audit = j["audit"].get<bool>();
    if (j.contains("include_n_eq_k")) c.include_n_eq_k = j["include_n_eq_k"].get<bool>();
    if (j.contains("report_csv")) c.report_csv = j["report_csv"].get<std::string>();
    if (j.contains("summary_json")) c.summary_json = j["summary_json"].get<std::string>();
    if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("campaign config: ") + e.what());
  }
  return c;
}

/// Graphs of a graph6 file; MalformedGraph6 names the 1-based record index.
/// Blank lines and a leading header are skipped.
inline std::vector<SimpleGraph> read_graph6_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::io_error, "cannot open '" + file + "'");
  std::vector<SimpleGraph> out;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++record;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      if (e.code() != Errc::malformed_graph6 && e.code() != Errc::too_large) throw;
      throw Error(e.code(), "record " + std::to_string(record) + ": " + e.detail(), e.offset());
    }
  }
  return out;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string campaign_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "graph6,n,chi,omega,alpha,kappa,verdict,equality_iso_ok,poly_json,bound_json\n";
  for (const auto& r : reports) {
    os << csv_quote(r.graph_id) << ',' << r.n << ',' << r.k << ',' << r.omega << ',' << r.alpha << ',' << r.kappa << ','
       << verdict_name(r.verdict) << ',' << (r.equality_iso_ok ? "true" : "false") << ',' << csv_quote(to_json(r.poly).dump())
       << ',' << csv_quote(to_json(r.bound).dump()) << '\n';
  }
  return os.str();
}

namespace detail {

inline void write_file(const std::string& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write '" + file + "'");
  out << text;
  if (!out) throw Error(Errc::io_error, "write to '" + file + "' failed");
}

struct CampaignItem {
  SimpleGraph graph;
  std::optional<BoundReport> report;
  std::vector<LemmaAudit> audits;
};

inline bool keep_graph(const CampaignConfig& cfg, const SimpleGraph& g, int& chi) {
  const int n = g.order();
  if (n < cfg.n_min || n > cfg.n_max) return false;
  if (cfg.connectivity >= 1 && (n == 0 || !is_connected(g))) return false;
  if (cfg.connectivity >= 2 && !is_2_connected(g)) return false;
  if (cfg.connectivity >= 3 && vertex_connectivity(g) < cfg.connectivity) return false;
  chi = chromatic_number(g);
  if (cfg.k ? chi != *cfg.k : chi < 4) return false;
  if (cfg.check == CampaignCheck::bound && !(n > chi || (cfg.include_n_eq_k && n == chi))) return false;
  if (cfg.alpha && independence_number(g) != *cfg.alpha) return false;
  if (cfg.omega || cfg.omega_below_chi) {
    const int w = clique_number(g);
    if (cfg.omega && w != *cfg.omega) return false;
    if (cfg.omega_below_chi && w >= chi) return false;
  }
  return true;
}

}  // namespace detail

/// Filter the source population, check every kept graph, and emit one report
/// row per graph in canonical-form order. Output files are byte-identical
/// across runs and across job counts.
inline CampaignResult run_campaign(const CampaignConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  if (cfg.graph6_file.empty() && (cfg.n_max > kMaxEnumerationOrder))
    throw Error(Errc::too_large, "builtin enumeration supports n <= 8");
  if (cfg.n_min > cfg.n_max) throw Error(Errc::invalid_params, "empty n range");

  std::vector<SimpleGraph> source;
  if (cfg.graph6_file.empty()) {
    for (int n = std::max(cfg.n_min, 0); n <= cfg.n_max; ++n)
      for (auto& g : enumerate_graphs(n)) source.push_back(std::move(g));
  } else {
    source = read_graph6_file(cfg.graph6_file);
  }

  std::vector<detail::CampaignItem> items(source.size());
  PolyMemo memo;
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= source.size()) return;
      try {
        auto& item = items[i];
        item.graph = source[i];
        int chi = 0;
        if (!detail::keep_graph(cfg, item.graph, chi)) continue;
        item.report = cfg.check == CampaignCheck::bound
                          ? check_bound(item.graph, cfg.ray_start, &memo, cfg.include_n_eq_k)
                          : check_tomescu_bound(item.graph, cfg.ray_start, &memo);
        if (cfg.audit) item.audits = audit_structure_lemmas(item.graph);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  CampaignResult res;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].report) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = *items[a].report;
    const auto& rb = *items[b].report;
    if (ra.n != rb.n) return ra.n < rb.n;
    return ra.graph_id < rb.graph_id;
  });

  nlohmann::json by_verdict{{"strictly_below", 0}, {"equal", 0}, {"violates", 0}};
  nlohmann::json equality = nlohmann::json::array();
  for (std::size_t i : order) {
    const BoundReport& r = *items[i].report;
    by_verdict[verdict_name(r.verdict)] = by_verdict[verdict_name(r.verdict)].get<int>() + 1;
    if (r.verdict == BoundVerdict::violates) ++res.violations;
    if (!r.equality_iso_ok) ++res.equality_failures;
    if (!r.integer_check_ok) ++res.integer_check_failures;
    if (r.verdict == BoundVerdict::equal)
      equality.push_back({{"graph6", r.graph_id}, {"n", r.n}, {"chi", r.k}, {"isomorphism_confirmed", r.equality_iso_ok}});
    for (const auto& a : items[i].audits)
      if (a.hypothesis_met && !a.conclusion_holds) res.audit_failures.emplace_back(r.graph_id, a);
    res.reports.push_back(r);
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  res.summary = {{"population", res.reports.size()},
                 {"by_verdict", by_verdict},
                 {"equality_graphs", equality},
                 {"violations", res.violations},
                 {"equality_failures", res.equality_failures},
                 {"integer_check_failures", res.integer_check_failures},
                 {"audit_failures", res.audit_failures.size()},
                 {"runtime_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};

  if (!cfg.report_csv.empty()) detail::write_file(cfg.report_csv, campaign_csv(res.reports));
  if (!cfg.summary_json.empty()) detail::write_file(cfg.summary_json, res.summary.dump(2) + "\n");
  return res;
}

}  // namespace chromax
