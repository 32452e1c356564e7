#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nqopt/rng.hpp"

namespace nqopt {

// Candidate solution for an n-queens instance: columns[i] is the column of
// the queen in row i. Duplicate columns are allowed; the cost function
// penalises them.
using Placement = std::vector<int>;

enum class InitMethod { UniformColumns = 1, RandomPermutation = 2 };

// Clash cost of a placement. Two components: (n - number of distinct
// columns), plus one for every ordered pair of rows (i, j), i != j, with
// |i - j| == |columns[i] - columns[j]|. An unordered diagonal-attacking pair
// therefore contributes 2, while a shared column only counts through the
// distinct-column term. Zero iff the placement is a valid solution. The
// maximum over all placements of size n is (n - 1) + n * (n - 1).
int evaluate_cost(const Placement& p);

int max_cost(int n);

Placement random_placement(int n, InitMethod method, Rng& rng);

// Number of rows touched by perturb: max(1, round(radius * n)), capped at n.
int perturb_count(int n, double radius);

// Copy of p with perturb_count(n, radius) distinct rows, drawn without
// replacement, each reassigned a uniformly random column (which may repeat
// the old value).
Placement perturb(const Placement& p, double radius, Rng& rng);

// Per-entry round half away from zero, clamped to [0, n - 1].
Placement decode_continuous(const std::vector<double>& v, int n);
void decode_continuous_into(const std::vector<double>& v, int n, Placement& out);

// Counting evaluator used by the solvers: owns the O(n) scratch buffers,
// tallies every call, tracks the best placement seen so far, and knows when
// the evaluation budget is spent. Solvers check stopped() and never evaluate
// past the cap.
class CostEvaluator {
 public:
  using Observer = std::function<void(const Placement&, int)>;

  CostEvaluator(int n, std::uint64_t nfe_cap, Observer observer = {});

  int operator()(const Placement& p);

  int n() const { return n_; }
  std::uint64_t nfe() const { return nfe_; }
  std::uint64_t cap() const { return cap_; }
  int best_cost() const { return best_cost_; }
  const Placement& best() const { return best_; }
  bool solved() const { return !best_.empty() && best_cost_ == 0; }
  bool capped() const { return nfe_ >= cap_; }
  bool stopped() const { return solved() || capped(); }

 private:
  int n_;
  std::uint64_t cap_;
  std::uint64_t nfe_ = 0;
  int best_cost_;
  Placement best_;
  std::vector<int> column_count_;
  std::vector<int> diag_sum_;
  std::vector<int> diag_diff_;
  Observer observer_;
};

}  // namespace nqopt
