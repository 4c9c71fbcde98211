#pragma once

// Command-line front end. run_cli() is the whole program, parameterized over
// its streams so it can be driven in-process.
//
// Exit codes: 0 success, 1 usage or input error, 2 mathematical violation.
// Diagnostics on stderr start with E_USAGE, E_PARSE or E_VIOLATION.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromax/chrompoly.hpp"
#include "chromax/ears.hpp"
#include "chromax/families.hpp"
#include "chromax/graph6.hpp"
#include "chromax/invariants.hpp"
#include "chromax/isomorphism.hpp"
#include "chromax/polyalg.hpp"
#include "chromax/verify.hpp"

namespace chromax {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_violation = 2 };

namespace cli {

struct GraphSource {
  std::string graph6;
  std::string edges_json;  // file path, "-" for stdin
  std::string family;
  std::string fixture;
  int n = 0;
  int k = 0;

  void attach(CLI::App* app) {
    app->add_option("--graph6", graph6, "graph in graph6 format");
    app->add_option("--edges", edges_json, "edge-list JSON file ({\"n\":..,\"edges\":[[u,v],..]}), - for stdin");
    app->add_option("--family", family, "complete|cycle|path|wheel|complete_bipartite|g_nk");
    app->add_option("--fixture", fixture, "named fixture");
    app->add_option("--n", n, "family order parameter");
    app->add_option("--k", k, "family second parameter");
  }

  SimpleGraph load(std::istream& in) const {
    int given = !graph6.empty() + !edges_json.empty() + !family.empty() + !fixture.empty();
    if (given != 1) throw Error(Errc::invalid_params, "give exactly one of --graph6, --edges, --family, --fixture");
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!fixture.empty()) return ::chromax::fixture(fixture).graph;
    if (!family.empty()) return ::chromax::family(family, n, k);
    std::string text;
    if (edges_json == "-") {
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream f(edges_json);
      if (!f) throw Error(Errc::io_error, "cannot open '" + edges_json + "'");
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error, e.what());
    }
    return from_edge_json(j);
  }
};

inline void emit(std::ostream& out, const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    out << text;
    return;
  }
  std::ofstream f(file, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot write '" + file + "'");
  f << text;
}

inline nlohmann::json invariants_json(const SimpleGraph& g) {
  nlohmann::json j{{"n", g.order()},
                   {"m", g.size()},
                   {"chi", chromatic_number(g)},
                   {"omega", clique_number(g)},
                   {"alpha", independence_number(g)},
                   {"kappa", vertex_connectivity(g)},
                   {"connected", is_connected(g)},
                   {"two_connected", is_2_connected(g)},
                   {"graph6", write_graph6(g)}};
  if (g.order() <= kMaxCanonicalOrder) j["canonical_graph6"] = canonical_form(g);
  return j;
}

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"chromax: exact chromatic polynomials and bound verification for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_file;
  app.add_option("--out", out_file, "write results here instead of stdout");

  // poly
  auto* poly = app.add_subcommand("poly", "chromatic polynomial of one graph");
  cli::GraphSource poly_src;
  poly_src.attach(poly);
  std::string strategy = "auto";
  bool with_trace = false;
  poly->add_option("--strategy", strategy, "auto|pure_delete_contract|closure_first");
  poly->add_flag("--trace", with_trace, "include the reduction trace");

  // invariants
  auto* inv = app.add_subcommand("invariants", "chi, omega, alpha, kappa of one graph");
  cli::GraphSource inv_src;
  inv_src.attach(inv);

  // fixtures
  auto* fx = app.add_subcommand("fixtures", "named figure graphs");
  fx->require_subcommand(1);
  auto* fx_list = fx->add_subcommand("list", "list fixture names");
  auto* fx_check = fx->add_subcommand("check", "compare every fixture with its expected polynomial");
  auto* fx_export = fx->add_subcommand("export", "dump all fixtures");
  std::string export_format = "json";
  fx_export->add_option("--format", export_format, "graph6|json")->check(CLI::IsMember({"graph6", "json"}));

  // verify
  auto* ver = app.add_subcommand("verify", "bound-verification campaign");
  std::string config_file, source = "builtin", ray = "at_chi", check = "bound", report, summary;
  int n_exact = 0, n_min = 4, n_max = 7, kf = 0, connectivity = 2, alpha = 0, omega = 0, jobs = 1;
  bool omega_below = false, audit = false, n_eq_k = false;
  ver->add_option("--config", config_file, "campaign config JSON; flags given explicitly override it");
  auto* o_n = ver->add_option("--n", n_exact, "single order");
  auto* o_nmin = ver->add_option("--n-min", n_min, "smallest order");
  auto* o_nmax = ver->add_option("--n-max", n_max, "largest order");
  auto* o_k = ver->add_option("--k", kf, "exact chromatic number (default: every k >= 4)");
  auto* o_conn = ver->add_option("--connectivity", connectivity, "minimum vertex connectivity (1, 2 or 3)");
  auto* o_alpha = ver->add_option("--alpha", alpha, "exact independence number");
  auto* o_omega = ver->add_option("--omega", omega, "exact clique number");
  auto* o_wbelow = ver->add_flag("--omega-below-chi", omega_below, "keep only omega < chi");
  auto* o_src = ver->add_option("--source", source, "builtin or a graph6 file");
  auto* o_ray = ver->add_option("--ray", ray, "at_chi or a rational ray start");
  auto* o_check = ver->add_option("--check", check, "bound|tomescu")->check(CLI::IsMember({"bound", "tomescu"}));
  auto* o_audit = ver->add_flag("--audit", audit, "also audit the cut-set lemmas");
  auto* o_neqk = ver->add_flag("--include-n-eq-k", n_eq_k, "also report n = k graphs");
  auto* o_report = ver->add_option("--report", report, "CSV report path");
  auto* o_summary = ver->add_option("--summary", summary, "summary JSON path (also printed)");
  auto* o_jobs = ver->add_option("--jobs", jobs, "worker threads")->envname("CHROMAX_JOBS");

  // audit
  auto* aud = app.add_subcommand("audit", "cut-set structure audit");
  cli::GraphSource aud_src;
  aud_src.attach(aud);
  int population = 0;
  aud->add_option("--population", population, "audit every graph on 1..N vertices instead of one graph");

  // prop13
  auto* prop = app.add_subcommand("prop13", "certify the three power / falling-factorial inequalities");
  int k_max = 20;
  std::string prop_ray = "2";
  prop->add_option("--k-max", k_max, "largest k");
  prop->add_option("--ray", prop_ray, "ray start (rational)");

  // convert
  auto* conv = app.add_subcommand("convert", "graph6 <-> edge-list JSON, one record per line");
  std::string conv_from = "graph6", conv_to = "json", conv_in = "-";
  conv->add_option("--from", conv_from)->check(CLI::IsMember({"graph6", "json"}));
  conv->add_option("--to", conv_to)->check(CLI::IsMember({"graph6", "json"}));
  conv->add_option("--in", conv_in, "input file, - for stdin");

  // sample
  auto* samp = app.add_subcommand("sample", "seeded random graphs as graph6 lines");
  int s_n = 7, s_count = 10;
  double s_p = 0.5;
  std::uint64_t seed = kDefaultSeed;
  std::string s_kind = "connected";
  samp->add_option("--n", s_n, "order");
  samp->add_option("--count", s_count, "number of graphs");
  samp->add_option("--p", s_p, "edge probability");
  samp->add_option("--seed", seed, "RNG seed (default " + std::to_string(kDefaultSeed) + ")");
  samp->add_option("--kind", s_kind, "any|connected|2-connected")->check(CLI::IsMember({"any", "connected", "2-connected"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "E_USAGE: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*poly) {
      SimpleGraph g = poly_src.load(in);
      ChromaticResult r = chromatic_polynomial(g, parse_strategy(strategy));
      nlohmann::json j{{"poly", to_json(r.poly)}, {"text", to_string(r.poly)}};
      if (with_trace) j["trace"] = to_json(r.trace);
      cli::emit(out, out_file, j.dump() + "\n");
      return exit_ok;
    }

    if (*inv) {
      cli::emit(out, out_file, cli::invariants_json(inv_src.load(in)).dump() + "\n");
      return exit_ok;
    }

    if (*fx) {
      if (*fx_list) {
        std::string text;
        for (const char* name : fixture_names()) text += std::string(name) + "\n";
        cli::emit(out, out_file, text);
        return exit_ok;
      }
      if (*fx_check) {
        nlohmann::json rows = nlohmann::json::array();
        bool all = true;
        for (const auto& f : all_fixtures()) {
          IntPoly p = chromatic_polynomial(f.graph).poly;
          bool ok = !f.expected_poly || p == *f.expected_poly;
          all = all && ok;
          rows.push_back({{"name", f.name}, {"pass", ok}, {"poly", to_string(p)}});
        }
        cli::emit(out, out_file, rows.dump(2) + "\n");
        if (!all) {
          err << "E_VIOLATION: fixture polynomial mismatch\n";
          return exit_violation;
        }
        return exit_ok;
      }
      std::string text;
      for (const auto& f : all_fixtures()) {
        if (export_format == "graph6") {
          text += write_graph6(f.graph) + "\n";
        } else {
          nlohmann::json j{{"name", f.name}, {"graph", to_edge_json(f.graph)}, {"provenance", f.provenance}};
          if (f.expected_poly) j["expected_poly"] = to_json(*f.expected_poly);
          text += j.dump() + "\n";
        }
      }
      cli::emit(out, out_file, text);
      return exit_ok;
    }

    if (*ver) {
      CampaignConfig cfg;
      if (!config_file.empty()) {
        std::ifstream f(config_file);
        if (!f) throw Error(Errc::io_error, "cannot open '" + config_file + "'");
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(f);
        } catch (const nlohmann::json::exception& e) {
          throw Error(Errc::parse_error, e.what());
        }
        cfg = campaign_config_from_json(j);
      }
      if (o_nmin->count()) cfg.n_min = n_min;
      if (o_nmax->count()) cfg.n_max = n_max;
      if (o_n->count()) cfg.n_min = cfg.n_max = n_exact;
      if (o_k->count()) cfg.k = kf;
      if (o_conn->count()) cfg.connectivity = connectivity;
      if (o_alpha->count()) cfg.alpha = alpha;
      if (o_omega->count()) cfg.omega = omega;
      if (o_wbelow->count()) cfg.omega_below_chi = omega_below;
      if (o_src->count()) cfg.graph6_file = source == "builtin" ? "" : source;
      if (o_ray->count()) {
        if (ray == "at_chi") cfg.ray_start.reset();
        else cfg.ray_start = parse_rational(ray);
      }
      if (o_check->count()) cfg.check = check == "tomescu" ? CampaignCheck::tomescu : CampaignCheck::bound;
      if (o_audit->count()) cfg.audit = audit;
      if (o_neqk->count()) cfg.include_n_eq_k = n_eq_k;
      if (o_report->count()) cfg.report_csv = report;
      if (o_summary->count()) cfg.summary_json = summary;
      if (o_jobs->count()) cfg.jobs = jobs;
      CampaignResult res = run_campaign(cfg);
      cli::emit(out, out_file, res.summary.dump(2) + "\n");
      if (!res.ok()) {
        err << "E_VIOLATION: " << res.violations << " bound violations, " << res.equality_failures
            << " equality mismatches, " << res.integer_check_failures << " integer check failures, "
            << res.audit_failures.size() << " audit failures\n";
        return exit_violation;
      }
      return exit_ok;
    }

    if (*aud) {
      nlohmann::json rows = nlohmann::json::array();
      int red = 0;
      auto run_one = [&](const SimpleGraph& g) {
        for (const auto& a : audit_structure_lemmas(g)) {
          if (a.hypothesis_met && !a.conclusion_holds) ++red;
          if (population > 0 && !(a.hypothesis_met && !a.conclusion_holds)) continue;
          nlohmann::json j = to_json(a);
          j["graph6"] = write_graph6(g);
          rows.push_back(std::move(j));
        }
      };
      if (population > 0) {
        for (int n = 1; n <= population; ++n)
          for (const auto& g : enumerate_graphs(n)) run_one(g);
      } else {
        run_one(aud_src.load(in));
      }
      cli::emit(out, out_file, rows.dump(2) + "\n");
      if (red > 0) {
        err << "E_VIOLATION: " << red << " audit rows with hypothesis met and conclusion failed\n";
        return exit_violation;
      }
      return exit_ok;
    }

    if (*prop) {
      auto certs = check_proposition_inequalities(k_max, parse_rational(prop_ray));
      nlohmann::json rows = nlohmann::json::array();
      int bad = 0;
      for (const auto& c : certs) {
        const bool ok = c.certificate.nonneg() && inequality3_shape_ok(c);
        if (!ok) ++bad;
        nlohmann::json j = to_json(c);
        j["pass"] = ok;
        rows.push_back(std::move(j));
      }
      cli::emit(out, out_file, rows.dump(2) + "\n");
      if (bad > 0) {
        err << "E_VIOLATION: " << bad << " inequality certificates failed\n";
        return exit_violation;
      }
      return exit_ok;
    }

    if (*conv) {
      std::vector<std::string> lines;
      if (conv_in == "-") {
        lines = cli::read_lines(in);
      } else {
        std::ifstream f(conv_in);
        if (!f) throw Error(Errc::io_error, "cannot open '" + conv_in + "'");
        lines = cli::read_lines(f);
      }
      std::string text;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        SimpleGraph g;
        try {
          if (conv_from == "graph6") {
            g = parse_graph6(lines[i]);
          } else {
            nlohmann::json j;
            try {
              j = nlohmann::json::parse(lines[i]);
            } catch (const nlohmann::json::exception& e) {
              throw Error(Errc::parse_error, e.what());
            }
            g = from_edge_json(j);
          }
        } catch (const Error& e) {
          throw Error(e.code(), "record " + std::to_string(i + 1) + ": " + e.detail(), e.offset());
        }
        text += (conv_to == "graph6" ? write_graph6(g) : to_edge_json(g).dump()) + "\n";
      }
      cli::emit(out, out_file, text);
      return exit_ok;
    }

    if (*samp) {
      if (s_n < 1 || s_count < 0 || s_p < 0 || s_p > 1) throw Error(Errc::invalid_params, "need n >= 1, count >= 0, p in [0, 1]");
      if (s_kind == "2-connected" && s_n < 3) throw Error(Errc::invalid_params, "2-connected graphs need n >= 3");
      std::mt19937_64 rng(seed);
      std::string text;
      for (int i = 0; i < s_count; ++i) {
        SimpleGraph g = s_kind == "any"         ? random_graph(s_n, s_p, rng)
                        : s_kind == "connected" ? random_connected_graph(s_n, s_p, rng)
                                                : random_2_connected_graph(s_n, s_p, rng);
        text += write_graph6(g) + "\n";
      }
      cli::emit(out, out_file, text);
      return exit_ok;
    }
  } catch (const Error& e) {
    const bool parse = e.code() == Errc::malformed_graph6 || e.code() == Errc::parse_error || e.code() == Errc::io_error;
    err << (parse ? "E_PARSE: " : "E_USAGE: ") << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace chromax
