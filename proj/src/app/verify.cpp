#include "parcov/app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parcov/app/suites.hpp"
#include "parcov/approx.hpp"
#include "parcov/cover_fpt.hpp"
#include "parcov/errors.hpp"
#include "parcov/oracle.hpp"
#include "parcov/reductions.hpp"
#include "parcov/sat_fpt.hpp"

namespace parcov::app {

namespace {

constexpr double kSlack = 1e-9;
constexpr double kHybridMus[] = {0.45, 0.5, 0.7, 1.0};

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void at(std::uint64_t seed, int k, int p) {
    seed_ = seed;
    k_ = k;
    p_ = p;
  }

  void expect(const std::string& check, bool ok, const std::string& detail = {}) {
    Tally& t = report_.tallies[check];
    ++t.runs;
    if (ok) return;
    ++t.failures;
    report_.mismatches.push_back({check, seed_, k_, p_, detail});
  }

 private:
  VerifyReport& report_;
  std::uint64_t seed_ = 0;
  int k_ = 0;
  int p_ = 0;
};

std::string verdicts(bool got, bool want) {
  return std::string("solver ") + (got ? "feasible" : "infeasible") + ", oracle " + (want ? "feasible" : "infeasible");
}

void verify_cover(const SetSystem& sys, std::uint64_t seed, const VerifyConfig& config, Checker& check) {
  CoverSearchOptions options;
  options.node_cap = config.node_cap;
  options.tie_break = config.tie_break;
  if (config.dp_cap) options.dp_cap = *config.dp_cap;

  for (int k = 0; k <= std::min(4, sys.m()); ++k) {
    const int opt = oracle::brute_max_cover(sys, k).value;
    for (int p = 0; p <= sys.n(); ++p) {
      check.at(seed, k, p);
      const CoverQuery q{k, p};
      const bool want = opt >= p;
      SolveReport r = alg1_solve(sys, q, options);
      check.expect("cover.alg1", r.feasible == want, verdicts(r.feasible, want));
      if (r.feasible) {
        bool ok = r.witness && static_cast<int>(r.witness->size()) <= k && sys.coverage(*r.witness) == r.covered &&
                  r.covered >= p;
        check.expect("cover.witness", ok, "alg1 witness does not re-verify");
      }
      check.expect("cover.node_bound", r.nodes_explored <= alg1_node_bound(sys, q),
                   std::to_string(r.nodes_explored) + " nodes");
      SolveReport viap = alg1_fpt_as_p(sys, q, options);
      check.expect("cover.alg1_fpt_p", viap.feasible == want, verdicts(viap.feasible, want));
      if (viap.feasible) {
        check.expect("cover.witness", viap.witness && sys.coverage(*viap.witness) >= p, "fpt-p witness does not re-verify");
      }
    }

    check.at(seed, k, opt);
    CoverResult greedy = greedy_max_coverage(sys, k, config.tie_break);
    check.expect("cover.greedy_ratio",
                 std::numbers::e * greedy.covered >= (std::numbers::e - 1.0) * opt - kSlack &&
                     sys.coverage(greedy.witness) == greedy.covered,
                 "greedy " + std::to_string(greedy.covered));
    for (double mu : kHybridMus) {
      if (mu * k < 1.0 - kSlack) continue;
      HybridResult h = pscschema(sys, k, HybridParams(mu), ExactEngine::kBranch, options);
      check.expect("cover.hybrid_ratio", h.covered >= ratio_guarantee(mu) * opt - kSlack &&
                                             static_cast<int>(h.witness.size()) <= k && sys.coverage(h.witness) == h.covered,
                   "mu=" + std::to_string(mu) + " hybrid " + std::to_string(h.covered));
      if (mu == 1.0) check.expect("cover.hybrid_exact", h.covered == opt, "hybrid " + std::to_string(h.covered));
    }
  }
}

void verify_cnf(const CnfFormula& phi, std::uint64_t seed, const VerifyConfig& config, Checker& check) {
  SatSearchOptions options;
  options.node_cap = config.node_cap;
  options.tie_break = config.tie_break;
  if (config.dp_cap) options.dp_cap = *config.dp_cap;

  auto witness_ok = [&](const SolveReport& r, int k, int p) {
    return r.witness && static_cast<int>(r.witness->size()) <= k && phi.count_satisfied(*r.witness) == r.covered &&
           r.covered >= p;
  };

  for (int k = 0; k <= std::min(4, phi.n_vars()); ++k) {
    const int opt = oracle::brute_max_sat(phi, k).value;
    for (int p = 0; p <= phi.m(); ++p) {
      check.at(seed, k, p);
      const SatQuery q{k, p};
      const bool want = opt >= p;

      SolveReport exact = satk_exact(phi, q, options);
      check.expect("sat.exact", exact.feasible == want, verdicts(exact.feasible, want));
      if (exact.feasible) check.expect("sat.witness", witness_ok(exact, k, p), "satk witness does not re-verify");

      SatPipelineResult pipe = solve_sat_pipeline(phi, q, options);
      check.expect("sat.pipeline", pipe.report.feasible == want, verdicts(pipe.report.feasible, want));
      if (pipe.report.feasible) {
        check.expect("sat.witness", witness_ok(pipe.report, k, p), "pipeline witness does not re-verify");
      }
      const PresolveResult& pre = pipe.presolve;
      if (pre.verdict == PresolveVerdict::kFeasible) {
        bool ok = want && pre.witness && static_cast<int>(pre.witness->size()) <= k &&
                  phi.count_satisfied(*pre.witness) >= p;
        check.expect("sat.presolve", ok, std::string(to_string(pre.rule)) + " feasible without a valid witness");
      } else if (pre.verdict == PresolveVerdict::kInfeasible) {
        check.expect("sat.presolve", !want, std::string(to_string(pre.rule)) + " infeasible on a feasible query");
      } else {
        check.expect("sat.node_bound", pipe.report.nodes_explored <= alg2_node_bound(phi, q),
                     std::to_string(pipe.report.nodes_explored) + " nodes");
      }
    }
  }
}

void verify_graph(const Graph& g, std::uint64_t seed, Checker& check) {
  for (int k = 0; k <= std::min(3, g.n()); ++k) {
    check.at(seed, k, 0);
    auto [ds, ds_q] = ds_to_psc(g, {k, 0});
    auto [pvc, pvc_q] = pvc_to_psc(g, {k, 0});
    int ds_opt = oracle::brute_max_domination(g, k).value;
    int ds_img = oracle::brute_max_cover(ds, k).value;
    check.expect("graph.ds", ds_opt == ds_img, std::to_string(ds_opt) + " vs " + std::to_string(ds_img));
    int pvc_opt = oracle::brute_max_edge_cover(g, k).value;
    int pvc_img = oracle::brute_max_cover(pvc, std::min(k, pvc.m())).value;
    check.expect("graph.pvc", pvc_opt == pvc_img, std::to_string(pvc_opt) + " vs " + std::to_string(pvc_img));
  }
  check.at(seed, 0, 0);
  auto ds = ds_to_psc(g, {0, 0}).first;
  auto pvc = pvc_to_psc(g, {0, 0}).first;
  bool ok = ds.max_cardinality() == g.max_degree() + 1 && pvc.max_frequency() <= 2 &&
            ds.n() == g.n() && pvc.n() == static_cast<int>(g.edges().size());
  check.expect("graph.structure", ok, "image parameters off");
}

}  // namespace

const Tally& VerifyReport::tally(const std::string& check) const {
  static const Tally empty;
  auto it = tallies.find(check);
  return it == tallies.end() ? empty : it->second;
}

VerifyConfig verify_suite_config(const std::string& suite) {
  VerifyConfig config;
  if (suite == "small") return config;
  if (suite == "tiny") {
    config.covers = 50;
    config.cnfs = 50;
    config.positive_cnfs = 25;
    config.graphs = 20;
    return config;
  }
  throw InputError("unknown verify suite '" + suite + "'");
}

std::uint64_t instance_seed(std::uint64_t seed, int stream, int i) {
  // splitmix64 finalizer
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(stream) * 0x100000001b3ULL +
                    static_cast<std::uint64_t>(i);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

VerifyReport run_verify_suite(std::uint64_t seed, const VerifyConfig& config) {
  VerifyReport report;
  Checker check(report);
  for (int i = 0; i < config.covers; ++i) {
    std::uint64_t s = instance_seed(seed, 0, i);
    verify_cover(suites::small_cover(s), s, config, check);
  }
  for (int i = 0; i < config.cnfs; ++i) {
    std::uint64_t s = instance_seed(seed, 1, i);
    verify_cnf(suites::small_cnf(s), s, config, check);
  }
  for (int i = 0; i < config.positive_cnfs; ++i) {
    std::uint64_t s = instance_seed(seed, 4, i);
    verify_cnf(suites::positive_cnf(s), s, config, check);
  }
  for (int i = 0; i < config.graphs; ++i) {
    std::uint64_t s = instance_seed(seed, 2, i);
    verify_graph(suites::small_graph(s), s, check);
  }
  return report;
}

}  // namespace parcov::app
