#include "parcov/sat_fpt.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

#include "parcov/cover_fpt.hpp"
#include "parcov/errors.hpp"

namespace parcov {

namespace {

using Clock = std::chrono::steady_clock;

void finish(const CnfFormula& phi, const SatQuery& q, std::optional<std::vector<int>> witness, SolveReport& report,
            Clock::time_point start) {
  if (witness) {
    std::sort(witness->begin(), witness->end());
    witness->erase(std::unique(witness->begin(), witness->end()), witness->end());
    report.covered = phi.count_satisfied(*witness);
    if (report.covered < q.p || static_cast<int>(witness->size()) > q.k) {
      throw std::logic_error("SAT solver produced a witness that does not verify");
    }
    report.feasible = true;
    report.witness = std::move(witness);
  }
  report.wall_time = Clock::now() - start;
}

// ---------------------------------------------------------------------------
// Polarity branching

class PolaritySearch {
 public:
  PolaritySearch(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options, SolveReport& report)
      : phi_(phi), q_(q), options_(options), report_(report), value_(static_cast<std::size_t>(phi.n_vars()), kUnset) {}

  std::optional<std::vector<int>> run() {
    std::vector<int> open(static_cast<std::size_t>(phi_.m()));
    for (int c = 0; c < phi_.m(); ++c) open[static_cast<std::size_t>(c)] = c;
    visit(open, 0, q_.k, 0);
    return found_;
  }

 private:
  static constexpr signed char kUnset = -1;

  void visit(const std::vector<int>& open, int satisfied, int k_left, int depth) {
    if (++report_.nodes_explored > options_.node_cap) {
      throw ResourceError("polarity branching exceeded node cap of " + std::to_string(options_.node_cap));
    }
    report_.max_depth = std::max(report_.max_depth, depth);
    if (satisfied >= q_.p) {
      found_ = trues_;
      return;
    }
    if (satisfied + static_cast<int>(open.size()) < q_.p) return;

    const int var = mixed_variable(open);
    if (var < 0) {
      leaf(open, satisfied, k_left);
      return;
    }
    report_.max_children = std::max(report_.max_children, k_left > 0 ? 2 : 1);

    for (bool truth : {true, false}) {
      if (truth && k_left == 0) continue;
      std::vector<int> next;
      int gained = 0;
      for (int c : open) {
        bool sat = false;
        bool alive = false;
        for (const Literal& lit : phi_.clause(c)) {
          if (lit.var == var) {
            sat = sat || lit.positive == truth;
          } else if (value_[static_cast<std::size_t>(lit.var)] == kUnset) {
            alive = true;
          }
        }
        if (sat) {
          ++gained;
        } else if (alive) {
          next.push_back(c);
        }
      }
      if (gained == 0) ++report_.stalled_steps;
      value_[static_cast<std::size_t>(var)] = truth ? 1 : 0;
      if (truth) trues_.push_back(var);
      visit(next, satisfied + gained, k_left - (truth ? 1 : 0), depth + 1);
      if (truth) trues_.pop_back();
      value_[static_cast<std::size_t>(var)] = kUnset;
      if (found_) return;
    }
  }

  // Unassigned variable with both signs among open clauses, or -1.
  int mixed_variable(const std::vector<int>& open) const {
    std::vector<unsigned char> signs(static_cast<std::size_t>(phi_.n_vars()), 0);
    for (int c : open) {
      for (const Literal& lit : phi_.clause(c)) {
        if (value_[static_cast<std::size_t>(lit.var)] == kUnset) {
          signs[static_cast<std::size_t>(lit.var)] |= lit.positive ? 1 : 2;
        }
      }
    }
    int pick = -1;
    for (int v = 0; v < phi_.n_vars(); ++v) {
      if (signs[static_cast<std::size_t>(v)] == 3) {
        pick = v;
        if (options_.tie_break == TieBreak::kSmallestIndex) break;
      }
    }
    return pick;
  }

  void leaf(const std::vector<int>& open, int satisfied, int k_left) {
    // Pure-negative variables go false, which satisfies every open clause
    // holding a negative literal. What remains is all-positive.
    std::vector<int> positive_only;
    for (int c : open) {
      bool has_negative = false;
      for (const Literal& lit : phi_.clause(c)) {
        has_negative = has_negative || (!lit.positive && value_[static_cast<std::size_t>(lit.var)] == kUnset);
      }
      if (has_negative) {
        ++satisfied;
      } else {
        positive_only.push_back(c);
      }
    }
    const int needed = q_.p - satisfied;
    if (needed <= 0) {
      found_ = trues_;
      return;
    }
    if (k_left == 0 || needed > static_cast<int>(positive_only.size())) return;

    const int r = static_cast<int>(positive_only.size());
    if (r > options_.dp_cap || r > 30) {
      throw ResourceError("hitting-set DP over " + std::to_string(r) + " clauses exceeds cap " +
                          std::to_string(options_.dp_cap));
    }
    ++report_.leaf_dp_calls;

    // Clause masks hit by each open variable.
    std::vector<std::uint32_t> hits(static_cast<std::size_t>(phi_.n_vars()), 0);
    for (int b = 0; b < r; ++b) {
      for (const Literal& lit : phi_.clause(positive_only[static_cast<std::size_t>(b)])) {
        if (value_[static_cast<std::size_t>(lit.var)] == kUnset) hits[static_cast<std::size_t>(lit.var)] |= 1u << b;
      }
    }
    std::vector<std::vector<int>> by_bit(static_cast<std::size_t>(r));
    for (int v = 0; v < phi_.n_vars(); ++v) {
      for (int b = 0; b < r; ++b) {
        if (hits[static_cast<std::size_t>(v)] & (1u << b)) by_bit[static_cast<std::size_t>(b)].push_back(v);
      }
    }

    constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
    const std::uint32_t full = (1u << r) - 1;
    std::vector<std::uint8_t> min_hit(static_cast<std::size_t>(full) + 1, kInf);
    min_hit[0] = 0;
    std::uint32_t target = 0;
    bool have_target = false;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int low = std::countr_zero(mask);
      std::uint8_t best = kInf;
      for (int v : by_bit[static_cast<std::size_t>(low)]) {
        std::uint8_t rest = min_hit[mask & ~hits[static_cast<std::size_t>(v)]];
        if (rest != kInf && rest + 1 < best) best = static_cast<std::uint8_t>(rest + 1);
      }
      min_hit[mask] = best;
      if (!have_target && best <= k_left && std::popcount(mask) >= needed) {
        target = mask;
        have_target = true;
      }
    }
    if (!have_target) return;

    std::vector<int> solution = trues_;
    for (std::uint32_t mask = target; mask != 0;) {
      const int low = std::countr_zero(mask);
      for (int v : by_bit[static_cast<std::size_t>(low)]) {
        std::uint8_t rest = min_hit[mask & ~hits[static_cast<std::size_t>(v)]];
        if (rest != kInf && rest + 1 == min_hit[mask]) {
          solution.push_back(v);
          mask &= ~hits[static_cast<std::size_t>(v)];
          break;
        }
      }
    }
    found_ = std::move(solution);
  }

  const CnfFormula& phi_;
  SatQuery q_;
  SatSearchOptions options_;
  SolveReport& report_;
  std::vector<signed char> value_;
  std::vector<int> trues_;
  std::optional<std::vector<int>> found_;
};

// ---------------------------------------------------------------------------
// Greedy-criterion branching

class CommitSearch {
 public:
  CommitSearch(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options, SolveReport& report)
      : phi_(phi),
        q_(q),
        options_(options),
        report_(report),
        in_s_(static_cast<std::size_t>(phi.n_vars()), 0),
        committed_(static_cast<std::size_t>(phi.m()), 0) {}

  std::optional<std::vector<int>> run() {
    visit(0, -1);
    return found_;
  }

 private:
  int progress() const { return static_cast<int>(s_.size()) + committed_count_; }

  void visit(int depth, int parent_progress) {
    if (++report_.nodes_explored > options_.node_cap) {
      throw ResourceError("commit branching exceeded node cap of " + std::to_string(options_.node_cap));
    }
    report_.max_depth = std::max(report_.max_depth, depth);
    if (progress() <= parent_progress) ++report_.stalled_steps;

    const int chosen = static_cast<int>(s_.size());
    if (chosen < q_.k && committed_count_ < q_.p) {
      const int var = greedy_variable();
      std::vector<int> positive;
      std::vector<int> mentioning;
      for (int c = 0; c < phi_.m(); ++c) {
        if (committed_[static_cast<std::size_t>(c)]) continue;
        for (const Literal& lit : phi_.clause(c)) {
          if (lit.var != var) continue;
          mentioning.push_back(c);
          if (lit.positive) positive.push_back(c);
        }
      }
      report_.max_children = std::max(report_.max_children, 1 + static_cast<int>(mentioning.size()));
      const int here = progress();

      s_.push_back(var);
      in_s_[static_cast<std::size_t>(var)] = 1;
      set_committed(positive, true);
      visit(depth + 1, here);
      set_committed(positive, false);
      in_s_[static_cast<std::size_t>(var)] = 0;
      s_.pop_back();
      if (found_) return;

      for (int c : mentioning) {
        set_committed({c}, true);
        visit(depth + 1, here);
        set_committed({c}, false);
        if (found_) return;
      }
      return;
    }

    if (chosen == q_.k) {
      if (phi_.count_satisfied(s_) >= q_.p) found_ = s_;
      return;
    }
    extend_to_committed();
  }

  // Variable outside S with the most positive occurrences in C_u.
  int greedy_variable() const {
    std::vector<int> d(static_cast<std::size_t>(phi_.n_vars()), 0);
    for (int c = 0; c < phi_.m(); ++c) {
      if (committed_[static_cast<std::size_t>(c)]) continue;
      for (const Literal& lit : phi_.clause(c)) d[static_cast<std::size_t>(lit.var)] += lit.positive;
    }
    int best = -1;
    for (int v = 0; v < phi_.n_vars(); ++v) {
      if (in_s_[static_cast<std::size_t>(v)]) continue;
      const auto dv = d[static_cast<std::size_t>(v)];
      if (best < 0 || dv > d[static_cast<std::size_t>(best)] ||
          (dv == d[static_cast<std::size_t>(best)] && options_.tie_break == TieBreak::kLargestIndex)) {
        best = v;
      }
    }
    return best;
  }

  void set_committed(const std::vector<int>& clauses, bool on) {
    for (int c : clauses) {
      committed_[static_cast<std::size_t>(c)] = on ? 1 : 0;
      committed_count_ += on ? 1 : -1;
    }
  }

  // Can k - |S| further true variables satisfy every committed clause?
  void extend_to_committed() {
    std::vector<Clause> residual;
    for (int c = 0; c < phi_.m(); ++c) {
      if (!committed_[static_cast<std::size_t>(c)]) continue;
      Clause rest;
      bool satisfied = false;
      for (const Literal& lit : phi_.clause(c)) {
        if (in_s_[static_cast<std::size_t>(lit.var)]) {
          satisfied = satisfied || lit.positive;
        } else {
          rest.push_back(lit);
        }
      }
      if (satisfied) continue;
      if (rest.empty()) return;
      residual.push_back(std::move(rest));
    }
    ++report_.leaf_dp_calls;
    CnfFormula sub(phi_.n_vars(), std::move(residual));
    SolveReport ext = satk_exact(sub, SatQuery{q_.k - static_cast<int>(s_.size()), sub.m()}, options_);
    if (!ext.feasible) return;
    std::vector<int> solution = s_;
    solution.insert(solution.end(), ext.witness->begin(), ext.witness->end());
    found_ = std::move(solution);
  }

  const CnfFormula& phi_;
  SatQuery q_;
  SatSearchOptions options_;
  SolveReport& report_;
  std::vector<char> in_s_;
  std::vector<int> s_;
  std::vector<char> committed_;
  int committed_count_ = 0;
  std::optional<std::vector<int>> found_;
};

}  // namespace

SolveReport satk_exact(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options) {
  validate_query(phi, q);
  const auto start = Clock::now();
  SolveReport report;
  PolaritySearch search(phi, q, options, report);
  finish(phi, q, search.run(), report, start);
  return report;
}

std::string_view to_string(PresolveRule rule) {
  switch (rule) {
    case PresolveRule::kNone: return "none";
    case PresolveRule::kAllFalse: return "all-false";
    case PresolveRule::kHighFrequency: return "high-frequency";
    case PresolveRule::kSmallTarget: return "small-target";
    case PresolveRule::kDelegateExact: return "delegate-exact";
  }
  return "none";
}

PresolveResult presolve_rules(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options) {
  validate_query(phi, q);
  auto accept = [&](const std::vector<int>& trues) {
    return static_cast<int>(trues.size()) <= q.k && phi.count_satisfied(trues) >= q.p;
  };
  auto feasible = [](PresolveRule rule, std::vector<int> trues) {
    return PresolveResult{PresolveVerdict::kFeasible, rule, std::move(trues), std::nullopt};
  };

  if (accept({})) return feasible(PresolveRule::kAllFalse, {});

  if (2 * q.p < phi.max_frequency()) {
    int top = 0;
    for (int v = 1; v < phi.n_vars(); ++v) {
      if (phi.occ_pos(v) + phi.occ_neg(v) > phi.occ_pos(top) + phi.occ_neg(top)) top = v;
    }
    std::vector<int> trues;
    if (phi.occ_pos(top) >= phi.occ_neg(top)) trues.push_back(top);
    if (accept(trues)) return feasible(PresolveRule::kHighFrequency, std::move(trues));
  }

  if (q.p < q.k) {
    std::vector<int> trues;
    std::vector<char> in(static_cast<std::size_t>(phi.n_vars()), 0);
    int current = phi.count_satisfied(trues);
    while (static_cast<int>(trues.size()) < q.k) {
      int best = -1;
      int best_count = current;
      for (int v = 0; v < phi.n_vars(); ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        trues.push_back(v);
        int count = phi.count_satisfied(trues);
        trues.pop_back();
        if (count > best_count) {
          best = v;
          best_count = count;
        }
      }
      if (best < 0) break;
      trues.push_back(best);
      in[static_cast<std::size_t>(best)] = 1;
      current = best_count;
    }
    if (accept(trues)) return feasible(PresolveRule::kSmallTarget, std::move(trues));
  }

  if (2 * q.p >= phi.m()) {
    SolveReport exact = satk_exact(phi, q, options);
    PresolveResult result;
    result.verdict = exact.feasible ? PresolveVerdict::kFeasible : PresolveVerdict::kInfeasible;
    result.rule = PresolveRule::kDelegateExact;
    result.witness = exact.witness;
    result.exact = std::move(exact);
    return result;
  }
  return {};
}

SolveReport alg2_solve(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options) {
  validate_query(phi, q);
  const auto start = Clock::now();
  SolveReport report;
  CommitSearch search(phi, q, options, report);
  finish(phi, q, search.run(), report, start);
  return report;
}

SatPipelineResult solve_sat_pipeline(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options) {
  const auto start = Clock::now();
  SatPipelineResult result;
  result.presolve = presolve_rules(phi, q, options);
  switch (result.presolve.verdict) {
    case PresolveVerdict::kPass:
      result.report = alg2_solve(phi, q, options);
      break;
    case PresolveVerdict::kInfeasible:
      result.report = *result.presolve.exact;
      break;
    case PresolveVerdict::kFeasible:
      if (result.presolve.exact) {
        result.report = *result.presolve.exact;
      } else {
        finish(phi, q, result.presolve.witness, result.report, start);
      }
      break;
  }
  result.report.wall_time = Clock::now() - start;
  return result;
}

std::uint64_t alg2_node_bound(const CnfFormula& phi, const SatQuery& q) {
  return geometric_node_bound(static_cast<std::uint64_t>(phi.max_frequency()) + 1, q.k + q.p);
}

}  // namespace parcov
