#include "nqopt/problem.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace nqopt {

namespace {

// Column tally plus two diagonal tallies, O(n). ordered_pairs accumulates
// c * (c - 1) per diagonal bucket by adding 2 * count before each increment.
// Rows i and j != i clash diagonally iff they share an (i + c) or an (i - c)
// bucket, never both, so nothing is counted twice. The second loop undoes the
// increments so the buffers come back clean without a full clear.
int cost_kernel(const Placement& p, std::vector<int>& columns,
                std::vector<int>& diag_sum, std::vector<int>& diag_diff) {
  const int n = static_cast<int>(p.size());
  int distinct = 0;
  int ordered_pairs = 0;
  for (int i = 0; i < n; ++i) {
    const int c = p[i];
    assert(c >= 0 && c < n);
    if (columns[c]++ == 0) ++distinct;
    int& up = diag_sum[i + c];
    ordered_pairs += 2 * up;
    ++up;
    int& down = diag_diff[i - c + n - 1];
    ordered_pairs += 2 * down;
    ++down;
  }
  for (int i = 0; i < n; ++i) {
    const int c = p[i];
    --columns[c];
    --diag_sum[i + c];
    --diag_diff[i - c + n - 1];
  }
  return (n - distinct) + ordered_pairs;
}

int checked_size(int n) {
  if (n < 1) throw std::invalid_argument("board size must be at least 1");
  return n;
}

}  // namespace

int evaluate_cost(const Placement& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return 0;
  std::vector<int> columns(static_cast<std::size_t>(n), 0);
  std::vector<int> diag_sum(static_cast<std::size_t>(2 * n - 1), 0);
  std::vector<int> diag_diff(static_cast<std::size_t>(2 * n - 1), 0);
  return cost_kernel(p, columns, diag_sum, diag_diff);
}

int max_cost(int n) { return (n - 1) + n * (n - 1); }

Placement random_placement(int n, InitMethod method, Rng& rng) {
  Placement p(static_cast<std::size_t>(n));
  if (method == InitMethod::RandomPermutation) {
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
  } else {
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = rng.uniform_int(0, n - 1);
  }
  return p;
}

int perturb_count(int n, double radius) {
  const long k = std::lround(radius * n);
  return static_cast<int>(std::clamp(k, 1L, static_cast<long>(n)));
}

Placement perturb(const Placement& p, double radius, Rng& rng) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return p;
  const int k = perturb_count(n, radius);
  Placement out = p;
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 0);
  for (int t = 0; t < k; ++t) {
    const std::size_t j =
        static_cast<std::size_t>(t) + rng.index(static_cast<std::size_t>(n - t));
    std::swap(rows[static_cast<std::size_t>(t)], rows[j]);
    out[static_cast<std::size_t>(rows[static_cast<std::size_t>(t)])] =
        rng.uniform_int(0, n - 1);
  }
  return out;
}

void decode_continuous_into(const std::vector<double>& v, int n, Placement& out) {
  out.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long r = std::lround(v[i]);
    out[i] = static_cast<int>(std::clamp(r, 0L, static_cast<long>(n - 1)));
  }
}

Placement decode_continuous(const std::vector<double>& v, int n) {
  Placement out;
  decode_continuous_into(v, n, out);
  return out;
}

CostEvaluator::CostEvaluator(int n, std::uint64_t nfe_cap, Observer observer)
    : n_(checked_size(n)),
      cap_(nfe_cap),
      best_cost_(max_cost(n) + 1),
      column_count_(static_cast<std::size_t>(n), 0),
      diag_sum_(static_cast<std::size_t>(2 * n - 1), 0),
      diag_diff_(static_cast<std::size_t>(2 * n - 1), 0),
      observer_(std::move(observer)) {}

int CostEvaluator::operator()(const Placement& p) {
  assert(static_cast<int>(p.size()) == n_);
  const int cost = cost_kernel(p, column_count_, diag_sum_, diag_diff_);
  ++nfe_;
  if (cost < best_cost_) {
    best_cost_ = cost;
    best_ = p;
  }
  if (observer_) observer_(p, cost);
  return cost;
}

}  // namespace nqopt
