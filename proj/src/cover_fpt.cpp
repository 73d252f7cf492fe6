#include "parcov/cover_fpt.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "parcov/errors.hpp"

namespace parcov {

using Bits = boost::dynamic_bitset<>;

SetSystem restrict_down(const SetSystem& sys, std::span<const int> chosen) {
  std::vector<char> covered(static_cast<std::size_t>(sys.n()), 0);
  for (int i : chosen) {
    for (int x : sys.set(i)) covered[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<std::vector<int>> sets;
  sets.reserve(sys.sets().size());
  for (const auto& s : sys.sets()) {
    std::vector<int> rest;
    for (int x : s) {
      if (!covered[static_cast<std::size_t>(x)]) rest.push_back(x);
    }
    sets.push_back(std::move(rest));
  }
  return SetSystem(sys.n(), std::move(sets));
}

std::optional<std::vector<int>> leaf_exact_cover(const SetSystem& sys, std::span<const int> universe, int budget,
                                                 int dp_cap) {
  const int u = static_cast<int>(universe.size());
  if (u == 0) return std::vector<int>{};
  if (budget <= 0) return std::nullopt;
  if (u > dp_cap || u > 30) {
    throw ResourceError("leaf DP universe of " + std::to_string(u) + " elements exceeds cap " + std::to_string(dp_cap));
  }

  std::vector<int> bit_of(static_cast<std::size_t>(sys.n()), -1);
  for (int b = 0; b < u; ++b) bit_of.at(static_cast<std::size_t>(universe[static_cast<std::size_t>(b)])) = b;

  // Distinct non-empty traces on the universe, first index wins.
  struct Trace {
    std::uint32_t mask;
    int index;
  };
  std::vector<Trace> traces;
  for (int i = 0; i < sys.m(); ++i) {
    std::uint32_t mask = 0;
    for (int x : sys.set(i)) {
      if (bit_of[static_cast<std::size_t>(x)] >= 0) mask |= 1u << bit_of[static_cast<std::size_t>(x)];
    }
    if (mask == 0) continue;
    bool seen = std::any_of(traces.begin(), traces.end(), [&](const Trace& t) { return t.mask == mask; });
    if (!seen) traces.push_back({mask, i});
  }
  std::vector<std::vector<std::size_t>> by_bit(static_cast<std::size_t>(u));
  for (std::size_t t = 0; t < traces.size(); ++t) {
    for (int b = 0; b < u; ++b) {
      if (traces[t].mask & (1u << b)) by_bit[static_cast<std::size_t>(b)].push_back(t);
    }
  }
  for (const auto& list : by_bit) {
    if (list.empty()) return std::nullopt;
  }

  // min_cover[mask]: fewest traces covering mask. Some trace must cover the
  // lowest set bit, so only those are tried.
  constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
  const std::uint32_t full = u == 32 ? ~0u : (1u << u) - 1;
  std::vector<std::uint8_t> min_cover(static_cast<std::size_t>(full) + 1, kInf);
  min_cover[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = __builtin_ctz(mask);
    std::uint8_t best = kInf;
    for (std::size_t t : by_bit[static_cast<std::size_t>(low)]) {
      std::uint8_t rest = min_cover[mask & ~traces[t].mask];
      if (rest != kInf && rest + 1 < best) best = static_cast<std::uint8_t>(rest + 1);
    }
    min_cover[mask] = best;
  }
  if (min_cover[full] == kInf || min_cover[full] > budget) return std::nullopt;

  std::vector<int> witness;
  for (std::uint32_t mask = full; mask != 0;) {
    const int low = __builtin_ctz(mask);
    for (std::size_t t : by_bit[static_cast<std::size_t>(low)]) {
      std::uint8_t rest = min_cover[mask & ~traces[t].mask];
      if (rest != kInf && rest + 1 == min_cover[mask]) {
        witness.push_back(traces[t].index);
        mask &= ~traces[t].mask;
        break;
      }
    }
  }
  std::sort(witness.begin(), witness.end());
  return witness;
}

namespace {

class BranchSearch {
 public:
  BranchSearch(const SetSystem& sys, const CoverQuery& q, const CoverSearchOptions& options, SolveReport& report)
      : sys_(sys), q_(q), options_(options), report_(report), in_t_(static_cast<std::size_t>(sys.m()), 0) {
    bits_.reserve(static_cast<std::size_t>(sys.m()));
    for (const auto& s : sys.sets()) {
      Bits b(static_cast<std::size_t>(sys.n()));
      for (int x : s) b.set(static_cast<std::size_t>(x));
      bits_.push_back(std::move(b));
    }
    imposed_.resize(static_cast<std::size_t>(sys.n()));
  }

  std::optional<std::vector<int>> run() {
    visit(0, -1);
    return found_;
  }

 private:
  int progress() const { return static_cast<int>(chosen_.size() + imposed_.count()); }

  void visit(int depth, int parent_progress) {
    if (++report_.nodes_explored > options_.node_cap) {
      throw ResourceError("branching exceeded node cap of " + std::to_string(options_.node_cap));
    }
    report_.max_depth = std::max(report_.max_depth, depth);
    if (progress() <= parent_progress) ++report_.stalled_steps;

    const int taken = static_cast<int>(chosen_.size());
    const int imposed = static_cast<int>(imposed_.count());
    if (taken < q_.k && imposed < q_.p) {
      const int pick = greedy_pick();
      Bits fresh = bits_[static_cast<std::size_t>(pick)] - imposed_;
      report_.max_children = std::max(report_.max_children, 1 + static_cast<int>(fresh.count()));
      const int here = progress();

      chosen_.push_back(pick);
      in_t_[static_cast<std::size_t>(pick)] = 1;
      Bits saved = imposed_;
      imposed_ |= bits_[static_cast<std::size_t>(pick)];
      visit(depth + 1, here);
      imposed_ = std::move(saved);
      in_t_[static_cast<std::size_t>(pick)] = 0;
      chosen_.pop_back();
      if (found_) return;

      for (auto x = fresh.find_first(); x != Bits::npos; x = fresh.find_next(x)) {
        imposed_.set(x);
        visit(depth + 1, here);
        imposed_.reset(x);
        if (found_) return;
      }
      return;
    }

    if (taken == q_.k) {
      if (union_of_chosen().count() >= static_cast<std::size_t>(q_.p)) found_ = chosen_;
      return;
    }

    // p <= |C| <= p + Delta - 1: cover what T leaves of C with the remaining budget.
    Bits left = imposed_ - union_of_chosen();
    std::vector<int> universe;
    for (auto x = left.find_first(); x != Bits::npos; x = left.find_next(x)) universe.push_back(static_cast<int>(x));
    ++report_.leaf_dp_calls;
    auto rest = leaf_exact_cover(restrict_down(sys_, chosen_), universe, q_.k - taken, options_.dp_cap);
    if (rest) {
      std::vector<int> solution = chosen_;
      solution.insert(solution.end(), rest->begin(), rest->end());
      found_ = std::move(solution);
    }
  }

  // Largest |S_i \ C|; among those, most imposed elements still uncovered by T.
  int greedy_pick() const {
    const Bits pending = imposed_ - union_of_chosen();
    int best = -1;
    std::size_t best_gain = 0;
    std::size_t best_pending = 0;
    for (int i = 0; i < sys_.m(); ++i) {
      if (in_t_[static_cast<std::size_t>(i)]) continue;
      const Bits& b = bits_[static_cast<std::size_t>(i)];
      std::size_t gain = (b - imposed_).count();
      std::size_t hits = (b & pending).count();
      bool better = best < 0 || gain > best_gain || (gain == best_gain && hits > best_pending) ||
                    (gain == best_gain && hits == best_pending && options_.tie_break == TieBreak::kLargestIndex);
      if (better) {
        best = i;
        best_gain = gain;
        best_pending = hits;
      }
    }
    return best;
  }

  Bits union_of_chosen() const {
    Bits u(static_cast<std::size_t>(sys_.n()));
    for (int i : chosen_) u |= bits_[static_cast<std::size_t>(i)];
    return u;
  }

  const SetSystem& sys_;
  CoverQuery q_;
  CoverSearchOptions options_;
  SolveReport& report_;
  std::vector<Bits> bits_;
  std::vector<char> in_t_;
  std::vector<int> chosen_;
  Bits imposed_;
  std::optional<std::vector<int>> found_;
};

void finish(const SetSystem& sys, const CoverQuery& q, std::optional<std::vector<int>> witness, SolveReport& report,
            std::chrono::steady_clock::time_point start) {
  if (witness) {
    std::sort(witness->begin(), witness->end());
    witness->erase(std::unique(witness->begin(), witness->end()), witness->end());
    report.covered = sys.coverage(*witness);
    if (report.covered < q.p || static_cast<int>(witness->size()) > q.k) {
      throw std::logic_error("cover solver produced a witness that does not verify");
    }
    report.feasible = true;
    report.witness = std::move(witness);
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
}

// Picks up to `limit` sets, each adding at least one new element, until
// `target` elements are covered.
std::vector<int> one_new_element_per_set(const SetSystem& sys, int target, int limit) {
  std::vector<char> covered(static_cast<std::size_t>(sys.n()), 0);
  std::vector<int> picked;
  int count = 0;
  for (int i = 0; i < sys.m() && count < target && static_cast<int>(picked.size()) < limit; ++i) {
    int gain = 0;
    for (int x : sys.set(i)) gain += !covered[static_cast<std::size_t>(x)];
    if (gain == 0) continue;
    for (int x : sys.set(i)) covered[static_cast<std::size_t>(x)] = 1;
    count += gain;
    picked.push_back(i);
  }
  return picked;
}

}  // namespace

SolveReport alg1_solve(const SetSystem& sys, const CoverQuery& q, const CoverSearchOptions& options) {
  validate_query(sys, q);
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  // k sets cover at most k * Delta elements.
  if (static_cast<long long>(q.p) > static_cast<long long>(q.k) * sys.max_cardinality()) {
    finish(sys, q, std::nullopt, report, start);
    return report;
  }
  BranchSearch search(sys, q, options, report);
  finish(sys, q, search.run(), report, start);
  return report;
}

SolveReport alg1_fpt_as_p(const SetSystem& sys, const CoverQuery& q, const CoverSearchOptions& options) {
  validate_query(sys, q);
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  if (q.p <= q.k) {
    // One set per element suffices.
    if (sys.union_size() >= q.p) finish(sys, q, one_new_element_per_set(sys, q.p, q.k), report, start);
    else finish(sys, q, std::nullopt, report, start);
    return report;
  }
  if (q.p <= sys.max_cardinality()) {
    // A largest set alone reaches p whenever one set is allowed.
    std::optional<std::vector<int>> witness;
    if (q.k >= 1) {
      for (int i = 0; i < sys.m(); ++i) {
        if (static_cast<int>(sys.set(i).size()) == sys.max_cardinality()) {
          witness = std::vector<int>{i};
          break;
        }
      }
    }
    finish(sys, q, std::move(witness), report, start);
    return report;
  }
  return alg1_solve(sys, q, options);
}

std::uint64_t geometric_node_bound(std::uint64_t base, int depth) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (int d = 0; d <= depth; ++d) {
    if (total > kMax - term) return kMax;
    total += term;
    if (base != 0 && term > kMax / base) {
      term = kMax;
    } else {
      term *= base;
    }
  }
  return total;
}

std::uint64_t alg1_node_bound(const SetSystem& sys, const CoverQuery& q) {
  const int delta = sys.max_cardinality();
  return geometric_node_bound(static_cast<std::uint64_t>(delta) + 1, q.k + q.p + delta - 1);
}

}  // namespace parcov
