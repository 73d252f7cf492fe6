#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "parcov/cover_fpt.hpp"
#include "parcov/instances.hpp"

namespace parcov {

struct CoverResult {
  std::vector<int> witness;
  int covered = 0;
};

/// Classic greedy max coverage: k rounds of the largest marginal gain,
/// stopping early once nothing is gained. Covers at least
/// (1 - (1 - 1/k)^k) * OPT >= (1 - 1/e) * OPT.
CoverResult greedy_max_coverage(const SetSystem& sys, int k, TieBreak tie_break = TieBreak::kSmallestIndex);

/// Admissible split fraction for the hybrid exact + greedy scheme.
///
/// mu must lie in ((e-2)/(e-1), 1]. For such mu the hybrid covers at least
/// ratio_guarantee() * OPT, which exceeds 1 - 1/e by epsilon_claim().
class HybridParams {
 public:
  /// Throws InputError for mu outside ((e-2)/(e-1), 1].
  explicit HybridParams(double mu);

  double mu() const noexcept { return mu_; }
  /// (1 - 1/e) mu^2 - (1 - 2/e) mu
  double epsilon_claim() const noexcept;
  /// (1 - 1/e) - (1 - 2/e) mu + (1 - 1/e) mu^2
  double ratio_guarantee() const noexcept;

  static double mu_lower_bound() noexcept;

 private:
  double mu_;
};

double ratio_guarantee(double mu) noexcept;

/// How the hybrid obtains the best k'-set coverage.
enum class ExactEngine {
  kBranch,  // alg1_solve, p climbing from the greedy value
  kBrute,   // oracle::brute_max_cover
};

struct HybridResult {
  std::vector<int> witness;  // T1 + T2, sorted
  int covered = 0;
  int k_exact = 0;   // k' = ceil(mu k)
  int k_greedy = 0;  // k'' = k - k'
  std::vector<int> exact_part;
  std::vector<int> greedy_part;
  int exact_covered = 0;
};

/// Exact best coverage with at most k sets, through the selected engine.
CoverResult exact_max_coverage(const SetSystem& sys, int k, ExactEngine engine,
                               const CoverSearchOptions& options = {});

/// Hybrid approximation: exact best k' = ceil(mu k) sets, then greedy with the
/// remaining k - k' sets on what those leave uncovered.
/// Throws InputError if mu * k < 1 or k > m.
HybridResult pscschema(const SetSystem& sys, int k, const HybridParams& params, ExactEngine engine = ExactEngine::kBranch,
                       const CoverSearchOptions& options = {});

/// Max-coverage routine used by iterated_set_cover: (residual system, budget) -> chosen indices.
using PartialCoverSolver = std::function<std::vector<int>(const SetSystem&, int)>;

struct IteratedCover {
  std::vector<int> cover;  // deduplicated, sorted
  int iterations = 0;
  std::vector<int> remaining_after;  // uncovered count after each round
};

/// Builds a full set cover by repeated partial covers of budget k0 on what is
/// still uncovered. Returns nullopt when the sets do not cover the ground set.
/// Throws InputError for k0 < 1 and std::logic_error if a round makes no
/// progress on a coverable residual.
std::optional<IteratedCover> iterated_set_cover(const SetSystem& sys, const PartialCoverSolver& partial, int k0);

/// Rounds needed when every round covers a fraction >= r of what remains:
/// ceil(-ln n / ln(1 - r)). Requires n >= 1 and 0 < r < 1.
int iteration_bound(int n, double r);

}  // namespace parcov
