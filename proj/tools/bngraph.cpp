// Command-line front end: parse graph files, dispatch computations, emit
// human-readable lines or machine-readable JSON.  Rationals print as p/q,
// never as floats.
//
// Exit codes: 0 success, 1 verify found ExistenceFails, 2 usage error,
// 64 precondition violated, 65 parse error, 66 file not found.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bngraph/brill_noether.hpp"
#include "bngraph/graph_io.hpp"

namespace {

using namespace bngraph;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 64;
constexpr int kExitParse = 65;
constexpr int kExitNoFile = 66;

struct Options {
  std::string command;
  std::string graph_path;
  std::string divisor;
  std::string gauge = "simplex";
  std::string gauge_int = "ell1";
  std::int64_t degree = 0;
  bool degree_set = false;
  int base = 0;
  int grid = 0;
  std::int64_t kmax = 3;
  bool json = false;
  bool emit = false;
  bool force = false;
};

std::string json_array(const IVec& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string graph_label(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int cmd_info(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  if (opt.emit) {
    std::cout << emit_graph(g);
    return 0;
  }
  if (opt.json) {
    std::cout << "{\"n\":" << g.n() << ",\"m\":" << g.m() << ",\"g\":" << g.genus()
              << ",\"stretch\":" << stretch_factor(g)
              << ",\"dense\":" << (is_dense(g) ? "true" : "false")
              << ",\"trees\":" << g.tree_count() << "}\n";
  } else {
    std::cout << "n=" << g.n() << " m=" << g.m() << " g=" << g.genus()
              << " stretch=" << stretch_factor(g)
              << " dense=" << (is_dense(g) ? "true" : "false")
              << " trees=" << g.tree_count() << "\n";
  }
  return 0;
}

QVec divisor_for(const Multigraph& g, const std::string& literal) {
  const QVec d = parse_divisor(literal);
  if ((int)d.size() != g.n())
    throw PreconditionViolation("divisor has " + std::to_string(d.size()) +
                                " entries, graph has " + std::to_string(g.n()) +
                                " vertices");
  return d;
}

int cmd_rank(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  const QVec d = divisor_for(g, opt.divisor);
  const NonSpecialSet ns = nonspecial_set(g, opt.base);
  const Rat r = rank_r(g, d, ns);
  if (opt.json)
    std::cout << "{\"value\":\"" << r.str() << "\"}\n";
  else
    std::cout << r.str() << "\n";
  return 0;
}

int cmd_reduce(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  const QVec dq = divisor_for(g, opt.divisor);
  IVec d;
  if (!integral(dq, &d))
    throw PreconditionViolation("reduce needs an integer divisor");
  const ReduceResult res = dhar_reduce(g, d, opt.base);
  if (opt.json)
    std::cout << "{\"reduced\":" << json_array(res.reduced)
              << ",\"firings\":" << json_array(res.firings) << "}\n";
  else
    std::cout << "reduced " << format_divisor(res.reduced) << "\nfirings "
              << format_divisor(res.firings) << "\n";
  return 0;
}

int cmd_nonspecial(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  const NonSpecialSet ns = nonspecial_set(g, opt.base);
  if (opt.json) {
    std::cout << "{\"q\":" << ns.base_vertex << ",\"count\":" << ns.reps.size()
              << ",\"reps\":[";
    for (std::size_t i = 0; i < ns.reps.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << json_array(ns.reps[i]);
    }
    std::cout << "]}\n";
  } else {
    std::cout << "count " << ns.reps.size() << "\n";
    for (const IVec& rep : ns.reps) std::cout << format_divisor(rep) << "\n";
  }
  return 0;
}

int cmd_covrad(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  const Gauge gauge = parse_gauge(opt.gauge);
  const NonSpecialSet ns = nonspecial_set(g, opt.base);
  const CoveringBound bound = covering_lower_certificate(g, gauge, ns);
  std::optional<Rat> sampled;
  if (opt.grid > 0) sampled = covering_radius_sampled(g, gauge, ns, opt.grid);
  if (opt.json) {
    std::cout << "{\"lowerBound\":\"" << bound.value.str()
              << "\",\"exact\":" << (bound.exact ? "true" : "false")
              << ",\"hAtCanonical\":\"" << bound.h_at_canonical.str()
              << "\",\"normConversion\":\"" << bound.norm_conversion.str() << "\"";
    if (sampled) std::cout << ",\"sampled\":\"" << sampled->str() << "\"";
    std::cout << "}\n";
  } else {
    std::cout << "lower-bound " << bound.value.str()
              << (bound.exact ? " (exact)" : " (certificate)") << "\n"
              << "h-at-canonical " << bound.h_at_canonical.str() << "\n"
              << "norm-conversion " << bound.norm_conversion.str() << "\n";
    if (sampled) std::cout << "sampled " << sampled->str() << "\n";
  }
  return 0;
}

int cmd_intcovrad(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  const Gauge gauge = parse_gauge(opt.gauge_int);
  const NonSpecialSet ns = nonspecial_set(g, opt.base);
  const Rat v = integral_covering_radius(g, gauge, ns);
  if (opt.json)
    std::cout << "{\"value\":\"" << v.str() << "\"}\n";
  else
    std::cout << v.str() << "\n";
  return 0;
}

int cmd_bn_scan(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  if (!opt.degree_set) throw PreconditionViolation("bn-scan needs --degree");
  const NonSpecialSet ns = nonspecial_set(g, opt.base);
  const BNReport rep = bn_scan(g, opt.degree, ns, graph_label(opt.graph_path));
  if (opt.json)
    std::cout << rep.json() << "\n";
  else
    std::cout << "d=" << rep.d << " maxRank=" << rep.max_rank
              << " bnBound=" << rep.bn_bound << " verdict=" << to_string(rep.verdict)
              << " witness=" << format_divisor(rep.witness) << "\n";
  return 0;
}

int cmd_verify(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  if (!opt.force) {
    if (g.genus() > 8)
      throw PreconditionViolation("genus " + std::to_string(g.genus()) +
                                  " > 8; pass --force to scan anyway");
    if (g.tree_count() > 1000000)
      throw PreconditionViolation("class count " + std::to_string(g.tree_count()) +
                                  " > 10^6; pass --force to scan anyway");
  }
  const NonSpecialSet ns = nonspecial_set(g, opt.base);
  const std::vector<BNReport> reports =
      verify_existence(g, ns, graph_label(opt.graph_path));
  bool failed = false;
  if (opt.json) {
    std::cout << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << reports[i].json();
    }
    std::cout << "]\n";
  }
  for (const BNReport& rep : reports) {
    if (!opt.json)
      std::cout << "d=" << rep.d << " maxRank=" << rep.max_rank
                << " bnBound=" << rep.bn_bound << " verdict=" << to_string(rep.verdict)
                << "\n";
    failed = failed || rep.verdict == Verdict::ExistenceFails;
  }
  return failed ? kExitVerifyFailed : 0;
}

int cmd_gonality(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  const NonSpecialSet ns = nonspecial_set(g, opt.base);
  const std::int64_t gon = gonality(g, ns);
  const std::int64_t bound = gonality_bound_approx(g);
  if (opt.json)
    std::cout << "{\"value\":\"" << gon << "\",\"bound\":\"" << bound << "\"}\n";
  else
    std::cout << "gonality=" << gon << " bound=" << bound << "\n";
  return 0;
}

int cmd_bounds(const Options& opt) {
  const Multigraph g = load_graph(opt.graph_path);
  if (opt.json) {
    std::cout << "{\"g\":" << g.genus() << ",\"stretch\":" << stretch_factor(g)
              << ",\"dense\":" << (is_dense(g) ? "true" : "false")
              << ",\"denseEqHypothesis\":" << (dense_eq_hypothesis(g) ? "true" : "false")
              << ",\"gonalityBound\":\"" << gonality_bound_approx(g)
              << "\",\"rGonalityBounds\":[";
    for (std::int64_t k = 1; k <= opt.kmax; ++k) {
      if (k > 1) std::cout << ",";
      std::cout << "\"" << r_gonality_bound(g, k) << "\"";
    }
    std::cout << "]}\n";
  } else {
    std::cout << "g=" << g.genus() << " stretch=" << stretch_factor(g)
              << " dense=" << (is_dense(g) ? "true" : "false") << "\n"
              << "dense-eq-hypothesis " << (dense_eq_hypothesis(g) ? "true" : "false")
              << "\n"
              << "gonality-bound " << gonality_bound_approx(g) << "\n";
    for (std::int64_t k = 1; k <= opt.kmax; ++k)
      std::cout << "r-gonality-bound k=" << k << " " << r_gonality_bound(g, k) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor theory, covering radii and Brill-Noether scans on multigraphs"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_base = true) {
    sub->add_option("graph", opt.graph_path, "graph file")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    if (with_base) sub->add_option("-q,--base", opt.base, "base vertex (default 0)");
  };
  const auto gauge_grammar = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          parse_gauge(s);
        } catch (const std::exception& e) {
          return e.what();
        }
        return {};
      },
      "GAUGE");
  const auto divisor_grammar = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          parse_divisor(s);
        } catch (const std::exception& e) {
          return e.what();
        }
        return {};
      },
      "DIVISOR");

  auto* info = app.add_subcommand("info", "graph invariants");
  add_common(info, false);
  info->add_flag("--emit", opt.emit, "re-emit the graph in canonical form");

  auto* rank = app.add_subcommand("rank", "rank of a divisor or R-divisor");
  add_common(rank);
  rank->add_option("--divisor", opt.divisor, "comma-separated rational coefficients")
      ->required()
      ->check(divisor_grammar);

  auto* reduce = app.add_subcommand("reduce", "q-reduced representative and firings");
  add_common(reduce);
  reduce->add_option("--divisor", opt.divisor, "comma-separated integer coefficients")
      ->required()
      ->check(divisor_grammar);

  auto* nonspecial = app.add_subcommand("nonspecial", "non-special orbit representatives");
  add_common(nonspecial);

  auto* covrad = app.add_subcommand("covrad", "covering-radius lower bounds");
  add_common(covrad);
  covrad->add_option("--gauge", opt.gauge, "simplex|cosimplex|ell1|P:<a>:<ab>")
      ->check(gauge_grammar);
  covrad->add_option("--grid", opt.grid, "also sample a rational grid");

  auto* intcov = app.add_subcommand("intcovrad", "integral covering radius");
  add_common(intcov);
  intcov->add_option("--gauge", opt.gauge_int, "simplex|cosimplex|ell1|P:<a>:<ab>")
      ->check(gauge_grammar);

  auto* scan = app.add_subcommand("bn-scan", "existence scan at one degree");
  add_common(scan);
  scan->add_option("--degree", opt.degree, "degree to scan")
      ->required()
      ->each([&](const std::string&) { opt.degree_set = true; });

  auto* verify = app.add_subcommand("verify", "existence scan over all degrees");
  add_common(verify);
  verify->add_flag("--force", opt.force, "override the genus/class-count guards");

  auto* gon = app.add_subcommand("gonality", "exact gonality and its upper bound");
  add_common(gon);

  auto* bounds = app.add_subcommand("bounds", "closed-form bound summary");
  add_common(bounds, false);
  bounds->add_option("--k", opt.kmax, "largest k for the k-th gonality bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(opt);
    if (rank->parsed()) return cmd_rank(opt);
    if (reduce->parsed()) return cmd_reduce(opt);
    if (nonspecial->parsed()) return cmd_nonspecial(opt);
    if (covrad->parsed()) return cmd_covrad(opt);
    if (intcov->parsed()) return cmd_intcovrad(opt);
    if (scan->parsed()) return cmd_bn_scan(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (gon->parsed()) return cmd_gonality(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
  } catch (const FileNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoFile;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
