// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "chromax/chromax.hpp"

using namespace chromax;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

int failures = 0;
constexpr std::uint64_t kSeed = 20240601;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.note.empty() ? "" : " -- ",
              o.note.c_str());
  std::fflush(stdout);
}

std::string g6(const SimpleGraph& g) { return write_graph6(g); }

}  // namespace

int main() {
  criterion(1, "figure fixtures", 1.0, [](Outcome& o) {
    const IntPoly X = IntPoly::x();
    auto xm = [](int c) { return IntPoly::x_minus(c); };
    const IntPoly y = xm(1);
    const IntPoly t_head = xm(1) * xm(2) * xm(3);
    const std::vector<std::pair<std::string, IntPoly>> expected{
        {"fig2_Gprime", X * xm(1) * pow(xm(2), 2) * IntPoly({4, -3, 1})},
        {"fig4_G0", falling_factorial(3, 1) * (pow(y, 4) - y * IntPoly({1, -3, 1}) - IntPoly::constant(2))},
        {"fig5_T1", t_head * IntPoly({0, -8, 10, -5, 1})},
        {"fig5_T2", t_head * IntPoly({0, -13, 14, -6, 1})},
        {"fig5_T3", t_head * IntPoly({0, -20, 19, -7, 1})},
    };
    for (const auto& [name, p] : expected)
      if (chromatic_polynomial(fixture(name).graph).poly != p) o.fail(name + " polynomial mismatch");
    if (!is_isomorphic(fixture("fig6").graph, fixture("fig5_T2").graph)) o.fail("fig6 not isomorphic to T2");
  });

  criterion(2, "extremal identity P(G_{n,k}) = f_{n,k}", 5.0, [](Outcome& o) {
    for (int k = 4; k <= 7; ++k)
      for (int n = k + 1; n <= k + 5; ++n)
        if (chromatic_polynomial(g_nk(n, k)).poly != f_bound(n, k))
          o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
  });

  criterion(3, "2-connected k-chromatic campaign, n <= 7", 600.0, [](Outcome& o) {
    CampaignConfig cfg;
    cfg.n_min = 5;
    cfg.n_max = 7;
    CampaignResult r = run_campaign(cfg);
    if (r.violations) o.fail(std::to_string(r.violations) + " violations");
    if (r.integer_check_failures) o.fail("integer check failures");
    std::set<std::string> equal, expected;
    for (const auto& rep : r.reports)
      if (rep.verdict == BoundVerdict::equal) equal.insert(rep.graph_id);
    for (int k = 4; k <= 7; ++k)
      for (int n = k + 1; n <= 7; ++n) expected.insert(canonical_form(g_nk(n, k)));
    if (equal != expected || r.equality_failures) o.fail("equality set differs from {G_{n,k}}");
    o.note = "population " + std::to_string(r.reports.size()) + (o.pass ? "" : "; " + o.note);
  });

  criterion(4, "tomescu cross-check, connected 4-chromatic, n <= 7", 600.0, [](Outcome& o) {
    CampaignConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 7;
    cfg.k = 4;
    cfg.connectivity = 1;
    cfg.check = CampaignCheck::tomescu;
    CampaignResult r = run_campaign(cfg);
    int equal = 0;
    for (const auto& rep : r.reports) {
      IntPoly diff = rep.bound - rep.poly;
      for (long long x = 4; x <= 36; ++x)
        if (eval(diff, x) < 0) o.fail("violation at x=" + std::to_string(x));
      if (!rep.equality_iso_ok) o.fail("equality vs 2-core mismatch " + rep.graph_id);
      equal += rep.verdict == BoundVerdict::equal;
    }
    if (r.violations) o.fail("ray certificate violations");
    if (o.pass) o.note = "population " + std::to_string(r.reports.size()) + ", equal " + std::to_string(equal);
  });

  criterion(5, "falling-factorial inequalities on [2, inf), k <= 20", 1.0, [](Outcome& o) {
    std::ostringstream bad;
    int failed = 0;
    for (const auto& c : check_proposition_inequalities(20, Rational(2))) {
      if (!c.certificate.nonneg() || !inequality3_shape_ok(c)) {
        if (failed++ < 3) bad << " (" << c.inequality << ", k=" << c.k << ", negative at " << *c.certificate.witness << ")";
      }
    }
    if (failed) o.fail(std::to_string(failed) + " certificates negative:" + bad.str() + (failed > 3 ? " ..." : ""));
  });

  criterion(6, "oracle equivalence and strategy independence", 120.0, [](Outcome& o) {
    for (const auto& f : all_fixtures())
      if (chromatic_polynomial(f.graph).poly != interpolate_chromatic(f.graph)) o.fail(f.name);
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 200; ++t) {
      int n = std::uniform_int_distribution<int>(1, 8)(rng);
      SimpleGraph g = random_connected_graph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
      if (chromatic_polynomial(g).poly != interpolate_chromatic(g)) o.fail("oracle " + g6(g));
    }
    for (int t = 0; t < 100;) {
      SimpleGraph g = random_graph(std::uniform_int_distribution<int>(2, 8)(rng), 0.5, rng);
      if (g.is_complete()) continue;
      ++t;
      IntPoly a = chromatic_polynomial(g).poly;
      if (a != chromatic_polynomial(g, Strategy::pure_delete_contract).poly ||
          a != chromatic_polynomial(g, Strategy::closure_first).poly)
        o.fail("strategies disagree on " + g6(g));
    }
  });

  criterion(7, "identity suites", 60.0, [](Outcome& o) {
    std::mt19937_64 rng(kSeed + 1);
    const IntPoly X = IntPoly::x();
    // clique gluing
    for (int t = 0; t < 100; ++t) {
      const int r = std::uniform_int_distribution<int>(0, 4)(rng);
      const int a = std::uniform_int_distribution<int>(0, 4)(rng), b = std::uniform_int_distribution<int>(0, 4)(rng);
      SimpleGraph g = random_graph(r + a, 0.5, rng), h = random_graph(r + b, 0.5, rng);
      for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) {
          g = g.add_edge(u, v);
          h = h.add_edge(u, v);
        }
      std::vector<Edge> e = g.edges();
      for (auto [u, v] : h.edges()) e.emplace_back(u < r ? u : u + a, v < r ? v : v + a);
      SimpleGraph glued = from_edge_list(r + a + b, e);
      if (chromatic_polynomial(glued).poly * falling_factorial(static_cast<unsigned>(r)) !=
          chromatic_polynomial(g).poly * chromatic_polynomial(h).poly)
        o.fail("gluing " + g6(glued));
    }
    // dominated vertex
    for (int t = 0; t < 100; ++t) {
      int n = std::uniform_int_distribution<int>(1, 9)(rng);
      SimpleGraph g = random_graph(n, 0.4, rng);
      int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
      for (int v = 0; v < n; ++v)
        if (v != u) g = g.add_edge(u, v);
      if (chromatic_polynomial(g).poly != X * compose_shift(chromatic_polynomial(g.delete_vertex(u)).poly, BigInt(-1)))
        o.fail("dominated vertex " + g6(g));
    }
    // subgraph bound: P(G) <= P(H) (x-1)^(n-|H|) on [2, inf) for connected induced H
    int sub_fail = 0, sub_int_fail = 0;
    std::string sub_example;
    for (int t = 0; t < 100; ++t) {
      int n = std::uniform_int_distribution<int>(2, 8)(rng);
      SimpleGraph g = random_connected_graph(n, 0.5, rng);
      int keep = std::uniform_int_distribution<int>(1, n)(rng);
      VertexSet s = bit(0);
      while (popcount(s) < keep) {
        VertexSet frontier = 0;
        for (int v : members(s)) frontier |= g.neighbors(v);
        s |= bit(lowest(frontier & ~s));
      }
      SimpleGraph h = g.induced(s);
      IntPoly rhs = chromatic_polynomial(h).poly * pow(IntPoly::x_minus(1), static_cast<unsigned>(n - h.order()));
      const IntPoly pg = chromatic_polynomial(g).poly;
      auto cert = leq_on_ray(pg, rhs, 2);
      if (!cert.nonneg()) {
        ++sub_fail;
        if (sub_example.empty()) sub_example = g6(g) + " at x=" + cert.witness->str();
      }
      for (long long x = 2; x <= 40; ++x)
        if (eval(pg, x) > eval(rhs, x)) ++sub_int_fail;
    }
    if (sub_fail)
      o.fail("subgraph bound negative on [2, inf) for " + std::to_string(sub_fail) + "/100 pairs (first " + sub_example +
             "); integer violations: " + std::to_string(sub_int_fail));
    // path with fixed endpoint colors
    for (int t = 4; t <= 10; ++t)
      for (long long x = 3; x <= 8; ++x) {
        BigInt bound = (BigInt((x - 1) * (x - 1)) - 1) * boost::multiprecision::pow(BigInt(x - 1), static_cast<unsigned>(t - 4));
        for (bool eq : {true, false})
          if (path_fixed_endpoint_colorings(t, x, eq) > bound) o.fail("path bound t=" + std::to_string(t));
      }
  });

  criterion(8, "structural audits over all graphs, n <= 7", 600.0, [](Outcome& o) {
    int applicable = 0;
    std::ostringstream red;
    int failed = 0;
    for (int n = 1; n <= 7; ++n)
      for (const auto& g : enumerate_graphs(n))
        for (const auto& a : audit_structure_lemmas(g)) {
          applicable += a.hypothesis_met;
          if (a.hypothesis_met && !a.conclusion_holds) {
            if (failed++ < 3) red << " " << a.lemma << " on " << g6(g) << " item " << a.failed_item;
          }
        }
    if (failed) o.fail(std::to_string(failed) + " hypothesis-met/conclusion-failed rows:" + red.str());
    else o.note = std::to_string(applicable) + " applicable rows";
  });

  criterion(9, "ear decompositions and blocks", 120.0, [](Outcome& o) {
    auto check = [&](const SimpleGraph& g) {
      EarDecomposition d = ear_decomposition(g);
      if (!is_valid_ear_decomposition(g, d) || reconstruct(g.order(), d) != g) o.fail("reconstruct " + g6(g));
      BlockSet bs = blocks_bounded_by_ears(g, d);
      for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
        if (!is_2_connected(bs.blocks[i].as_graph())) o.fail("block not 2-connected in " + g6(g));
        for (std::size_t j = i + 1; j < bs.blocks.size(); ++j)
          if (popcount(bs.blocks[i].vertices & bs.blocks[j].vertices) > 1) o.fail("blocks overlap in " + g6(g));
      }
    };
    int count = 0;
    for (int n = 3; n <= 6; ++n)
      for (const auto& g : enumerate_graphs(n, is_2_connected)) {
        check(g);
        ++count;
      }
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < 500; ++t) {
      check(random_2_connected_graph(7 + t % 2, std::uniform_real_distribution<double>(0.2, 0.7)(rng), rng));
      ++count;
    }
    if (o.pass) o.note = std::to_string(count) + " graphs";
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
