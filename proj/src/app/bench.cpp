#include "parcov/app/bench.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <memory>
#include <thread>

#include "parcov/app/verify.hpp"
#include "parcov/approx.hpp"
#include "parcov/cover_fpt.hpp"
#include "parcov/errors.hpp"
#include "parcov/sat_fpt.hpp"

namespace parcov::app {

namespace {

struct Job {
  std::function<BenchRecord()> run;
  std::uint64_t bound = 0;  // 0: no node assertion
  bool bound_applies = false;
};

struct JobResult {
  BenchRecord record;
  bool checked = false;
  bool violated = false;
};

BenchRecord cover_stub(const std::string& id, const std::string& algo, const SetSystem& sys, int k, int p) {
  BenchRecord r;
  r.instance_id = id;
  r.algorithm_name = algo;
  r.n = sys.n();
  r.m = sys.m();
  r.delta = sys.max_cardinality();
  r.f = sys.max_frequency();
  r.k = k;
  r.p = p;
  return r;
}

void fill(BenchRecord& r, const SolveReport& rep) {
  r.feasible = rep.feasible;
  r.covered_satisfied = rep.covered;
  r.nodes_explored = rep.nodes_explored;
  r.time_ms = rep.time_ms();
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const BenchConfig& config) : config_(config) {
    cover_.node_cap = config.node_cap;
    sat_.node_cap = config.node_cap;
    if (config.dp_cap) {
      cover_.dp_cap = *config.dp_cap;
      sat_.dp_cap = *config.dp_cap;
    }
  }

  std::vector<Job>& jobs() { return jobs_; }

  void cover_instance(const std::string& id, SetSystem sys, int k, int p) {
    auto shared = std::make_shared<const SetSystem>(std::move(sys));
    const CoverQuery q{k, p};
    const std::uint64_t bound = alg1_node_bound(*shared, q);
    auto options = cover_;
    jobs_.push_back({[=] {
                       BenchRecord r = cover_stub(id, "alg1", *shared, k, p);
                       fill(r, alg1_solve(*shared, q, options));
                       return r;
                     },
                     bound, true});
    jobs_.push_back({[=] {
                       BenchRecord r = cover_stub(id, "alg1-fpt-p", *shared, k, p);
                       fill(r, alg1_fpt_as_p(*shared, q, options));
                       return r;
                     },
                     bound, true});
    jobs_.push_back({[=] {
                       BenchRecord r = cover_stub(id, "greedy", *shared, k, p);
                       auto t0 = std::chrono::steady_clock::now();
                       CoverResult g = greedy_max_coverage(*shared, k);
                       r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                       r.feasible = g.covered >= p;
                       r.covered_satisfied = g.covered;
                       return r;
                     },
                     0, false});
  }

  void sat_instance(const std::string& id, CnfFormula phi, int k, int p) {
    auto shared = std::make_shared<const CnfFormula>(std::move(phi));
    const SatQuery q{k, p};
    auto options = sat_;
    auto stub = [shared, id, k, p](const std::string& algo) {
      BenchRecord r;
      r.instance_id = id;
      r.algorithm_name = algo;
      r.n = shared->n_vars();
      r.m = shared->m();
      int longest = 0;
      for (const auto& c : shared->clauses()) longest = std::max(longest, static_cast<int>(c.size()));
      r.delta = longest;
      r.f = shared->max_frequency();
      r.k = k;
      r.p = p;
      return r;
    };
    jobs_.push_back({[=] {
                       BenchRecord r = stub("satk-exact");
                       fill(r, satk_exact(*shared, q, options));
                       return r;
                     },
                     0, false});
    // The alg2 bound applies only when presolve passes; the job reports that itself.
    jobs_.push_back({[=] {
                       BenchRecord r = stub("pipeline");
                       SatPipelineResult res = solve_sat_pipeline(*shared, q, options);
                       fill(r, res.report);
                       return r;
                     },
                     alg2_node_bound(*shared, q), presolve_rules(*shared, q, options).verdict == PresolveVerdict::kPass});
  }

  void n_sweep() {
    // Fixed Delta and (k, p); n grows.
    int index = 0;
    for (int n : {12, 24, 48, 96, 192, 384, 768}) {
      for (int rep = 0; rep < 3; ++rep, ++index) {
        std::uint64_t s = instance_seed(config_.seed, 10, index);
        cover_instance("n-sweep/" + std::to_string(n) + "/" + std::to_string(rep), gen_set_system(n, n / 2, 3, 2, s), 2,
                       5);
      }
    }
  }

  void delta_sweep() {
    int index = 0;
    for (int delta : {3, 4, 5, 6, 7}) {
      for (int rep = 0; rep < 3; ++rep, ++index) {
        std::uint64_t s = instance_seed(config_.seed, 11, index);
        cover_instance("delta-sweep/" + std::to_string(delta) + "/" + std::to_string(rep),
                       gen_set_system(60, 30, delta, 30, s), 2, 6);
      }
    }
  }

  void sat_sweep() {
    int index = 0;
    for (int f : {2, 3, 4, 5}) {
      for (int rep = 0; rep < 3; ++rep, ++index) {
        std::uint64_t s = instance_seed(config_.seed, 12, index);
        CnfFormula phi = gen_cnf(12, 16, 3, f, s);
        int p = std::min(phi.m(), phi.count_negative_satisfied() + 3);
        sat_instance("sat-sweep/" + std::to_string(f) + "/" + std::to_string(rep), std::move(phi), 3, p);
      }
    }
  }

 private:
  const BenchConfig& config_;
  CoverSearchOptions cover_;
  SatSearchOptions sat_;
  std::vector<Job> jobs_;
};

}  // namespace

std::vector<std::string> bench_suites() { return {"empty", "n-sweep", "delta-sweep", "sat-sweep", "all"}; }

BenchOutcome run_bench(const BenchConfig& config) {
  SuiteBuilder builder(config);
  if (config.suite == "n-sweep") {
    builder.n_sweep();
  } else if (config.suite == "delta-sweep") {
    builder.delta_sweep();
  } else if (config.suite == "sat-sweep") {
    builder.sat_sweep();
  } else if (config.suite == "all") {
    builder.n_sweep();
    builder.delta_sweep();
    builder.sat_sweep();
  } else if (config.suite != "empty") {
    throw InputError("unknown bench suite '" + config.suite + "'");
  }
  if (config.workers < 1) throw InputError("workers must be at least 1");

  std::vector<Job>& jobs = builder.jobs();
  std::vector<JobResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i].record = jobs[i].run();
        if (jobs[i].bound_applies) {
          results[i].checked = true;
          results[i].violated = results[i].record.nodes_explored > jobs[i].bound;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < std::min<int>(config.workers, static_cast<int>(std::max<std::size_t>(jobs.size(), 1))); ++w) {
      pool.emplace_back(worker);
    }
  }

  BenchOutcome out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.records.push_back(std::move(results[i].record));
    out.bound_checks += results[i].checked;
    out.bound_violations += results[i].violated;
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "instance_id,algorithm_name,n,m,delta,f,k,p,feasible,covered_satisfied,nodes_explored,time_ms\n";
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.algorithm_name << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.f << ','
        << r.k << ',' << r.p << ',' << (r.feasible ? 1 : 0) << ',' << r.covered_satisfied << ',' << r.nodes_explored
        << ',' << std::fixed << std::setprecision(3) << r.time_ms << '\n';
  }
}

}  // namespace parcov::app
