#include "parcov/app/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "parcov/app/bench.hpp"
#include "parcov/app/json_output.hpp"
#include "parcov/app/verify.hpp"
#include "parcov/approx.hpp"
#include "parcov/cover_fpt.hpp"
#include "parcov/errors.hpp"
#include "parcov/oracle.hpp"
#include "parcov/reductions.hpp"
#include "parcov/sat_fpt.hpp"

namespace parcov::app {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t node_cap = 100'000'000;
  std::optional<int> dp_cap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

class Summary {
 public:
  Summary(std::ostream& err, bool color) : err_(err), color_(color) {}

  void ok(const std::string& line) { emit("\033[32m", line); }
  void bad(const std::string& line) { emit("\033[31m", line); }
  void plain(const std::string& line) { err_ << line << '\n'; }

 private:
  void emit(const char* code, const std::string& line) {
    if (color_) {
      err_ << code << line << "\033[0m\n";
    } else {
      err_ << line << '\n';
    }
  }

  std::ostream& err_;
  bool color_;
};

CoverSearchOptions cover_options(const Globals& g) {
  CoverSearchOptions o;
  o.node_cap = g.node_cap;
  if (g.dp_cap) o.dp_cap = *g.dp_cap;
  return o;
}

SatSearchOptions sat_options(const Globals& g) {
  SatSearchOptions o;
  o.node_cap = g.node_cap;
  if (g.dp_cap) o.dp_cap = *g.dp_cap;
  return o;
}

template <class Fn>
auto timed(Fn&& fn, std::chrono::nanoseconds& elapsed) {
  auto t0 = std::chrono::steady_clock::now();
  auto result = fn();
  elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
  return result;
}

double ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  int k = 0;
  int p = 0;
  std::string algo;
};

int cmd_solve_cover(const SolveArgs& a, const Globals& g, CliStreams& io) {
  SetSystem sys = parse_set_system(read_file(a.input));
  const CoverQuery q{a.k, a.p};
  validate_query(sys, q);
  SolveReport r;
  if (a.algo == "branch") {
    r = alg1_solve(sys, q, cover_options(g));
  } else if (a.algo == "fpt-p") {
    r = alg1_fpt_as_p(sys, q, cover_options(g));
  } else {
    auto best = timed([&] { return oracle::brute_max_cover(sys, a.k); }, r.wall_time);
    r.feasible = best.value >= a.p;
    if (r.feasible) {
      r.witness = best.witness;
      r.covered = best.value;
    }
  }
  json j = cover_report_json(r);
  j["algorithm"] = a.algo;
  j["k"] = a.k;
  j["p"] = a.p;
  io.out << dump(j);
  Summary s(io.err, io.color);
  std::string line = "solve-cover[" + a.algo + "] k=" + std::to_string(a.k) + " p=" + std::to_string(a.p) + ": ";
  if (r.feasible) {
    s.ok(line + "feasible, " + std::to_string(r.covered) + " covered, " + std::to_string(r.nodes_explored) + " nodes");
  } else {
    s.bad(line + "infeasible, " + std::to_string(r.nodes_explored) + " nodes");
  }
  return kExitOk;
}

int cmd_solve_sat(const SolveArgs& a, const Globals& g, CliStreams& io) {
  CnfFormula phi = parse_dimacs_cnf(read_file(a.input));
  const SatQuery q{a.k, a.p};
  validate_query(phi, q);
  SolveReport r;
  PresolveRule rule = PresolveRule::kNone;
  if (a.algo == "pipeline") {
    SatPipelineResult res = solve_sat_pipeline(phi, q, sat_options(g));
    r = res.report;
    rule = res.presolve.rule;
  } else if (a.algo == "alg2") {
    r = alg2_solve(phi, q, sat_options(g));
  } else if (a.algo == "exact") {
    r = satk_exact(phi, q, sat_options(g));
  } else {
    auto best = timed([&] { return oracle::brute_max_sat(phi, a.k); }, r.wall_time);
    r.feasible = best.value >= a.p;
    if (r.feasible) {
      r.witness = best.witness;
      r.covered = best.value;
    }
  }
  json j = sat_report_json(r, phi.n_vars());
  j["algorithm"] = a.algo;
  j["k"] = a.k;
  j["p"] = a.p;
  j["presolve_rule"] = std::string(to_string(rule));
  io.out << dump(j);
  Summary s(io.err, io.color);
  std::string line = "solve-sat[" + a.algo + "] k=" + std::to_string(a.k) + " p=" + std::to_string(a.p) + ": ";
  if (r.feasible) {
    s.ok(line + "feasible, " + std::to_string(r.covered) + " satisfied");
  } else {
    s.bad(line + "infeasible");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ApproxArgs {
  std::string input;
  int k = 0;
  std::string algo = "greedy";
  double mu = 0.5;
  std::string exact = "branch";
  bool oracle = false;
};

ExactEngine engine_of(const std::string& name) { return name == "brute" ? ExactEngine::kBrute : ExactEngine::kBranch; }

int cmd_approx(const ApproxArgs& a, const Globals& g, CliStreams& io) {
  SetSystem sys = parse_set_system(read_file(a.input));
  if (a.k < 0 || a.k > sys.m()) throw InputError("k=" + std::to_string(a.k) + " outside [0, m]");
  json j;
  j["algorithm"] = a.algo;
  j["k"] = a.k;
  std::chrono::nanoseconds elapsed{0};
  int covered = 0;
  double guarantee = 0.0;
  if (a.algo == "greedy") {
    CoverResult r = timed([&] { return greedy_max_coverage(sys, a.k); }, elapsed);
    covered = r.covered;
    guarantee = 1.0 - 1.0 / std::numbers::e;
    j["witness"] = one_based(r.witness);
    j["mu"] = nullptr;
  } else {
    HybridParams params(a.mu);
    HybridResult r = timed([&] { return pscschema(sys, a.k, params, engine_of(a.exact), cover_options(g)); }, elapsed);
    covered = r.covered;
    guarantee = params.ratio_guarantee();
    j["witness"] = one_based(r.witness);
    j["mu"] = a.mu;
    j["k_exact"] = r.k_exact;
    j["k_greedy"] = r.k_greedy;
    j["exact_covered"] = r.exact_covered;
    j["exact"] = a.exact;
  }
  j["covered"] = covered;
  j["ratio_guarantee"] = guarantee;
  j["time_ms"] = ms(elapsed);
  Summary s(io.err, io.color);
  std::string line = "approx[" + a.algo + "] k=" + std::to_string(a.k) + ": " + std::to_string(covered) + " covered";
  if (a.oracle) {
    int opt = oracle::brute_max_cover(sys, a.k).value;
    double ratio = opt == 0 ? 1.0 : static_cast<double>(covered) / opt;
    j["optimum"] = opt;
    j["measured_ratio"] = ratio;
    line += ", optimum " + std::to_string(opt);
    if (ratio >= guarantee - 1e-9) {
      s.ok(line);
    } else {
      s.bad(line + " (below guarantee)");
    }
  } else {
    s.plain(line);
  }
  io.out << dump(j);
  return kExitOk;
}

struct IterateArgs {
  std::string input;
  int k0 = 1;
  std::string algo = "greedy";
  double mu = 0.5;
};

int cmd_cover_iterate(const IterateArgs& a, const Globals& g, CliStreams& io) {
  SetSystem sys = parse_set_system(read_file(a.input));
  PartialCoverSolver partial;
  if (a.algo == "greedy") {
    partial = [](const SetSystem& s, int budget) { return greedy_max_coverage(s, budget).witness; };
  } else {
    HybridParams params(a.mu);
    CoverSearchOptions options = cover_options(g);
    partial = [params, options](const SetSystem& s, int budget) {
      return pscschema(s, budget, params, ExactEngine::kBranch, options).witness;
    };
  }
  std::chrono::nanoseconds elapsed{0};
  auto result = timed([&] { return iterated_set_cover(sys, partial, a.k0); }, elapsed);
  const int bound = sys.n() >= 1 ? iteration_bound(sys.n(), 1.0 - 1.0 / std::numbers::e) : 0;
  json j;
  j["algorithm"] = a.algo;
  j["k0"] = a.k0;
  j["iteration_bound"] = bound;
  j["time_ms"] = ms(elapsed);
  j["solvable"] = result.has_value();
  Summary s(io.err, io.color);
  if (result) {
    j["cover"] = one_based(result->cover);
    j["cover_size"] = result->cover.size();
    j["iterations"] = result->iterations;
    j["remaining_after"] = result->remaining_after;
    j["within_bound"] = result->iterations <= bound;
    s.ok("cover-iterate: " + std::to_string(result->cover.size()) + " sets in " + std::to_string(result->iterations) +
         " rounds (bound " + std::to_string(bound) + ")");
  } else {
    j["cover"] = nullptr;
    j["cover_size"] = nullptr;
    j["iterations"] = nullptr;
    j["remaining_after"] = nullptr;
    j["within_bound"] = nullptr;
    s.bad("cover-iterate: the sets do not cover the ground set");
  }
  io.out << dump(j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string from;
  std::string input;
  std::string output;
};

int cmd_reduce(const ReduceArgs& a, CliStreams& io) {
  Graph graph = parse_dimacs_graph(read_file(a.input));
  SetSystem image = (a.from == "ds" ? ds_to_psc(graph, {0, 0}) : pvc_to_psc(graph, {0, 0})).first;
  std::string text = write_set_system(image);
  std::string line = "reduce[" + a.from + "]: n=" + std::to_string(image.n()) + " m=" + std::to_string(image.m()) +
                     " delta=" + std::to_string(image.max_cardinality()) + " f=" + std::to_string(image.max_frequency());
  Summary(io.err, io.color).plain(line);
  if (a.output.empty()) {
    io.out << text;
    return kExitOk;
  }
  write_text(a.output, text);
  json j{{"from", a.from},
         {"n", image.n()},
         {"m", image.m()},
         {"delta", image.max_cardinality()},
         {"f", image.max_frequency()},
         {"output", a.output}};
  io.out << dump(j);
  return kExitOk;
}

struct GenArgs {
  std::string kind = "psc";
  int n = 10;
  int m = 8;
  int delta = 3;
  int f = 3;
  int len = 3;
  double prob = 0.3;
  std::string output;
};

int cmd_gen(const GenArgs& a, const Globals& g, CliStreams& io) {
  std::string text;
  if (a.kind == "psc") {
    text = write_set_system(gen_set_system(a.n, a.m, a.delta, a.f, g.seed));
  } else if (a.kind == "cnf") {
    text = write_dimacs_cnf(gen_cnf(a.n, a.m, a.len, a.f, g.seed));
  } else {
    text = write_dimacs_graph(gen_graph(a.n, a.prob, g.seed));
  }
  if (a.output.empty()) {
    io.out << text;
  } else {
    write_text(a.output, text);
    Summary(io.err, io.color).plain("gen[" + a.kind + "]: wrote " + a.output);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string suite = "all";
  std::string csv;
  int workers = 1;
};

int cmd_bench(const BenchArgs& a, const Globals& g, CliStreams& io) {
  BenchConfig config;
  config.suite = a.suite;
  config.seed = g.seed;
  config.workers = a.workers;
  config.node_cap = g.node_cap;
  config.dp_cap = g.dp_cap;
  BenchOutcome outcome = run_bench(config);
  std::ostringstream csv;
  write_csv(csv, outcome.records);
  write_text(a.csv, csv.str());

  json j{{"suite", a.suite},
         {"seed", g.seed},
         {"records", outcome.records.size()},
         {"bound_checks", outcome.bound_checks},
         {"bound_violations", outcome.bound_violations},
         {"csv", a.csv}};
  io.out << dump(j);
  Summary s(io.err, io.color);
  std::string line = "bench[" + a.suite + "]: " + std::to_string(outcome.records.size()) + " records, " +
                     std::to_string(outcome.bound_violations) + " bound violations";
  if (outcome.bound_violations == 0) {
    s.ok(line);
    return kExitOk;
  }
  s.bad(line);
  return kExitFailure;
}

struct VerifyArgs {
  std::string suite = "small";
  std::string tie_break = "smallest";
};

int cmd_verify(const VerifyArgs& a, const Globals& g, CliStreams& io) {
  VerifyConfig config = verify_suite_config(a.suite);
  config.tie_break = a.tie_break == "largest" ? TieBreak::kLargestIndex : TieBreak::kSmallestIndex;
  config.node_cap = g.node_cap;
  config.dp_cap = g.dp_cap;
  VerifyReport report = run_verify_suite(g.seed, config);

  json checks = json::object();
  std::uint64_t runs = 0;
  for (const auto& [name, t] : report.tallies) {
    checks[name] = {{"runs", t.runs}, {"failures", t.failures}};
    runs += t.runs;
  }
  json mismatches = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(report.mismatches.size(), 50); ++i) {
    const Mismatch& m = report.mismatches[i];
    mismatches.push_back({{"check", m.check}, {"instance_seed", m.instance_seed}, {"k", m.k}, {"p", m.p},
                          {"detail", m.detail}});
  }
  const std::string summary = std::to_string(report.mismatches.size()) + " mismatches";
  json j{{"suite", a.suite},
         {"seed", g.seed},
         {"tie_break", a.tie_break},
         {"checks", checks},
         {"mismatch_count", report.mismatches.size()},
         {"mismatches", mismatches},
         {"summary", summary}};
  io.out << dump(j);
  Summary s(io.err, io.color);
  std::string line = "verify[" + a.suite + "] seed " + std::to_string(g.seed) + ": " + std::to_string(runs) +
                     " checks, " + summary;
  if (report.mismatches.empty()) {
    s.ok(line);
    return kExitOk;
  }
  s.bad(line);
  return kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, CliStreams io) {
  CLI::App app{"Partial covering solvers: MAX k-SET COVER and MAX SAT-k", "parcov"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for every generator");
  app.add_option("--node-cap", g.node_cap, "Search tree node budget")->check(CLI::PositiveNumber);
  app.add_option("--dp-cap", g.dp_cap, "Largest leaf DP universe")->check(CLI::Range(1, 30));

  std::function<int()> action;

  SolveArgs cover;
  auto* sc = app.add_subcommand("solve-cover", "Decide partial set cover");
  sc->add_option("-i,--input", cover.input, "psc file")->required();
  sc->add_option("-k", cover.k, "Set budget")->required();
  sc->add_option("-p", cover.p, "Coverage target")->required();
  cover.algo = "branch";
  sc->add_option("--algo", cover.algo)->check(CLI::IsMember({"branch", "fpt-p", "brute"}));
  sc->callback([&] { action = [&] { return cmd_solve_cover(cover, g, io); }; });

  SolveArgs sat;
  auto* ss = app.add_subcommand("solve-sat", "Decide MAX SAT-k");
  ss->add_option("-i,--input", sat.input, "DIMACS CNF file")->required();
  ss->add_option("-k", sat.k, "Variables set true")->required();
  ss->add_option("-p", sat.p, "Clauses to satisfy")->required();
  sat.algo = "pipeline";
  ss->add_option("--algo", sat.algo)->check(CLI::IsMember({"pipeline", "alg2", "exact", "brute"}));
  ss->callback([&] { action = [&] { return cmd_solve_sat(sat, g, io); }; });

  ApproxArgs approx;
  auto* ap = app.add_subcommand("approx", "Approximate max coverage");
  ap->add_option("-i,--input", approx.input, "psc file")->required();
  ap->add_option("-k", approx.k, "Set budget")->required();
  ap->add_option("--algo", approx.algo)->check(CLI::IsMember({"greedy", "hybrid"}));
  ap->add_option("--mu", approx.mu, "Exact fraction of the budget");
  ap->add_option("--exact", approx.exact)->check(CLI::IsMember({"branch", "brute"}));
  ap->add_flag("--oracle", approx.oracle, "Report the optimum and measured ratio");
  ap->callback([&] { action = [&] { return cmd_approx(approx, g, io); }; });

  IterateArgs iterate;
  auto* it = app.add_subcommand("cover-iterate", "Set cover from repeated partial covers");
  it->add_option("-i,--input", iterate.input, "psc file")->required();
  it->add_option("--k0", iterate.k0, "Sets per round")->required();
  it->add_option("--algo", iterate.algo)->check(CLI::IsMember({"greedy", "hybrid"}));
  it->add_option("--mu", iterate.mu);
  it->callback([&] { action = [&] { return cmd_cover_iterate(iterate, g, io); }; });

  ReduceArgs reduce;
  auto* rd = app.add_subcommand("reduce", "Graph problem to partial set cover");
  rd->add_option("--from", reduce.from)->required()->check(CLI::IsMember({"ds", "pvc"}));
  rd->add_option("-i,--input", reduce.input, "DIMACS graph file")->required();
  rd->add_option("-o,--output", reduce.output, "psc file (default stdout)");
  rd->callback([&] { action = [&] { return cmd_reduce(reduce, io); }; });

  GenArgs gen;
  auto* gn = app.add_subcommand("gen", "Seeded instance generator");
  gn->add_option("--kind", gen.kind)->check(CLI::IsMember({"psc", "cnf", "graph"}));
  gn->add_option("--n", gen.n, "Elements, variables or vertices");
  gn->add_option("--m", gen.m, "Sets or clauses");
  gn->add_option("--delta", gen.delta, "Max set size");
  gn->add_option("--f", gen.f, "Max frequency");
  gn->add_option("--len", gen.len, "Max clause length");
  gn->add_option("--prob", gen.prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gn->add_option("-o,--output", gen.output);
  gn->callback([&] { action = [&] { return cmd_gen(gen, g, io); }; });

  BenchArgs bench;
  auto* bn = app.add_subcommand("bench", "Instrumented sweeps to CSV");
  bn->add_option("--suite", bench.suite)->check(CLI::IsMember(bench_suites()));
  bn->add_option("--csv", bench.csv)->required();
  bn->add_option("--workers", bench.workers)->check(CLI::Range(1, 256));
  bn->callback([&] { action = [&] { return cmd_bench(bench, g, io); }; });

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Cross-check every solver against its oracle");
  vf->add_option("--suite", verify.suite)->check(CLI::IsMember({"small", "tiny"}));
  vf->add_option("--tie-break", verify.tie_break)->check(CLI::IsMember({"smallest", "largest"}));
  vf->callback([&] { action = [&] { return cmd_verify(verify, g, io); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, io.out, io.err);
      return kExitOk;
    }
    io.err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    return action();
  } catch (const InputError& e) {
    io.err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    io.err << "resource cap: " << e.what() << '\n';
    return kExitResource;
  }
}

}  // namespace parcov::app
