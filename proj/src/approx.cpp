#include "parcov/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "parcov/errors.hpp"
#include "parcov/oracle.hpp"

namespace parcov {

CoverResult greedy_max_coverage(const SetSystem& sys, int k, TieBreak tie_break) {
  std::vector<char> covered(static_cast<std::size_t>(sys.n()), 0);
  std::vector<char> taken(static_cast<std::size_t>(sys.m()), 0);
  CoverResult result;
  for (int round = 0; round < std::min(k, sys.m()); ++round) {
    int best = -1;
    int best_gain = 0;
    for (int i = 0; i < sys.m(); ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      int gain = 0;
      for (int x : sys.set(i)) gain += !covered[static_cast<std::size_t>(x)];
      if (gain > best_gain || (gain == best_gain && gain > 0 && tie_break == TieBreak::kLargestIndex)) {
        best = i;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    taken[static_cast<std::size_t>(best)] = 1;
    for (int x : sys.set(best)) covered[static_cast<std::size_t>(x)] = 1;
    result.witness.push_back(best);
    result.covered += best_gain;
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

// ---------------------------------------------------------------------------

namespace {
constexpr double kInvE = 1.0 / std::numbers::e;
}

double HybridParams::mu_lower_bound() noexcept { return (std::numbers::e - 2.0) / (std::numbers::e - 1.0); }

HybridParams::HybridParams(double mu) : mu_(mu) {
  if (!(mu > mu_lower_bound() && mu <= 1.0)) {
    throw InputError("mu=" + std::to_string(mu) + " outside ((e-2)/(e-1), 1]");
  }
}

double HybridParams::epsilon_claim() const noexcept {
  return (1.0 - kInvE) * mu_ * mu_ - (1.0 - 2.0 * kInvE) * mu_;
}

double HybridParams::ratio_guarantee() const noexcept { return parcov::ratio_guarantee(mu_); }

double ratio_guarantee(double mu) noexcept {
  return (1.0 - kInvE) - (1.0 - 2.0 * kInvE) * mu + (1.0 - kInvE) * mu * mu;
}

CoverResult exact_max_coverage(const SetSystem& sys, int k, ExactEngine engine, const CoverSearchOptions& options) {
  if (engine == ExactEngine::kBrute) {
    auto best = oracle::brute_max_cover(sys, k);
    return {best.witness, best.value};
  }
  // Greedy is a lower bound; climb until alg1 fails, so only the last query is infeasible.
  CoverResult best = greedy_max_coverage(sys, k, options.tie_break);
  const long long reach = std::min<long long>(sys.n(), static_cast<long long>(k) * sys.max_cardinality());
  for (int p = best.covered + 1; p <= reach; ++p) {
    SolveReport report = alg1_solve(sys, CoverQuery{k, p}, options);
    if (!report.feasible) break;
    best = {*report.witness, report.covered};
    p = report.covered;
  }
  return best;
}

HybridResult pscschema(const SetSystem& sys, int k, const HybridParams& params, ExactEngine engine,
                       const CoverSearchOptions& options) {
  if (k < 0 || k > sys.m()) throw InputError("k=" + std::to_string(k) + " outside [0, m]");
  const double scaled = params.mu() * k;
  if (scaled < 1.0 - 1e-9) {
    throw InputError("mu*k=" + std::to_string(scaled) + " < 1 leaves no budget for the exact part");
  }
  HybridResult result;
  // Absorb rounding noise such as 0.7 * 10 = 7.000000000000001.
  result.k_exact = std::min(k, static_cast<int>(std::ceil(scaled - 1e-9)));
  result.k_greedy = k - result.k_exact;

  CoverResult first = exact_max_coverage(sys, result.k_exact, engine, options);
  result.exact_part = first.witness;
  result.exact_covered = first.covered;

  // Sets of T1 are empty in the residual, so greedy never picks them.
  SetSystem residual = restrict_down(sys, first.witness);
  CoverResult second = greedy_max_coverage(residual, result.k_greedy);
  result.greedy_part = second.witness;

  result.witness = first.witness;
  result.witness.insert(result.witness.end(), second.witness.begin(), second.witness.end());
  std::sort(result.witness.begin(), result.witness.end());
  result.witness.erase(std::unique(result.witness.begin(), result.witness.end()), result.witness.end());
  result.covered = sys.coverage(result.witness);
  return result;
}

// ---------------------------------------------------------------------------

std::optional<IteratedCover> iterated_set_cover(const SetSystem& sys, const PartialCoverSolver& partial, int k0) {
  if (k0 < 1) throw InputError("k0 must be at least 1");
  if (sys.union_size() != sys.n()) return std::nullopt;

  IteratedCover result;
  std::vector<char> covered(static_cast<std::size_t>(sys.n()), 0);
  int remaining = sys.n();
  SetSystem residual = sys;
  while (remaining > 0) {
    std::vector<int> chosen = partial(residual, std::min(k0, residual.m()));
    int gain = 0;
    for (int i : chosen) {
      for (int x : sys.set(i)) {
        if (!covered[static_cast<std::size_t>(x)]) {
          covered[static_cast<std::size_t>(x)] = 1;
          ++gain;
        }
      }
    }
    if (gain == 0) throw std::logic_error("partial cover solver made no progress on a coverable residual");
    remaining -= gain;
    ++result.iterations;
    result.remaining_after.push_back(remaining);
    result.cover.insert(result.cover.end(), chosen.begin(), chosen.end());
    residual = restrict_down(residual, chosen);
  }
  std::sort(result.cover.begin(), result.cover.end());
  result.cover.erase(std::unique(result.cover.begin(), result.cover.end()), result.cover.end());
  return result;
}

int iteration_bound(int n, double r) {
  if (n < 1) throw InputError("iteration_bound: n must be positive");
  if (!(r > 0.0 && r < 1.0)) throw InputError("iteration_bound: r must lie in (0, 1)");
  return static_cast<int>(std::ceil(-std::log(static_cast<double>(n)) / std::log(1.0 - r)));
}

}  // namespace parcov
