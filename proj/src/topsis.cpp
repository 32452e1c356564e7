#include "nqopt/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nqopt {

TopsisResult topsis_rank(const DecisionMatrix& m) {
  const std::size_t alternatives = m.values.size();
  if (alternatives == 0) throw std::invalid_argument("decision matrix has no alternatives");
  const std::size_t criteria = m.values.front().size();
  if (criteria == 0) throw std::invalid_argument("decision matrix has no criteria");
  for (const auto& row : m.values) {
    if (row.size() != criteria) throw std::invalid_argument("decision matrix rows are ragged");
  }
  if (m.weights.size() != criteria) {
    throw std::invalid_argument("need one weight per criterion");
  }
  if (m.directions.size() != criteria) {
    throw std::invalid_argument("need one direction per criterion");
  }
  for (double w : m.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be finite and non-negative");
    }
  }

  // Vector normalisation, then weighting. A zero column stays zero.
  std::vector<std::vector<double>> weighted(alternatives, std::vector<double>(criteria, 0.0));
  for (std::size_t c = 0; c < criteria; ++c) {
    double norm_sq = 0.0;
    for (std::size_t a = 0; a < alternatives; ++a) norm_sq += m.values[a][c] * m.values[a][c];
    const double norm = std::sqrt(norm_sq);
    for (std::size_t a = 0; a < alternatives; ++a) {
      const double scaled = norm > 0.0 ? m.values[a][c] / norm : 0.0;
      weighted[a][c] = m.weights[c] * scaled;
    }
  }

  std::vector<double> ideal(criteria, 0.0);
  std::vector<double> anti(criteria, 0.0);
  for (std::size_t c = 0; c < criteria; ++c) {
    double lo = weighted[0][c];
    double hi = weighted[0][c];
    for (std::size_t a = 1; a < alternatives; ++a) {
      lo = std::min(lo, weighted[a][c]);
      hi = std::max(hi, weighted[a][c]);
    }
    const bool maximize = m.directions[c] == Direction::Maximize;
    ideal[c] = maximize ? hi : lo;
    anti[c] = maximize ? lo : hi;
  }

  TopsisResult result;
  result.closeness.resize(alternatives);
  for (std::size_t a = 0; a < alternatives; ++a) {
    double d_ideal_sq = 0.0;
    double d_anti_sq = 0.0;
    for (std::size_t c = 0; c < criteria; ++c) {
      const double di = weighted[a][c] - ideal[c];
      const double da = weighted[a][c] - anti[c];
      d_ideal_sq += di * di;
      d_anti_sq += da * da;
    }
    const double d_ideal = std::sqrt(d_ideal_sq);
    const double d_anti = std::sqrt(d_anti_sq);
    const double denom = d_ideal + d_anti;
    result.closeness[a] = denom > 0.0 ? d_anti / denom : 0.5;
  }

  result.ranking.resize(alternatives);
  std::iota(result.ranking.begin(), result.ranking.end(), 0);
  std::stable_sort(result.ranking.begin(), result.ranking.end(),
                   [&](std::size_t a, std::size_t b) {
                     return result.closeness[a] > result.closeness[b];
                   });
  return result;
}

std::size_t select_config_index(const std::vector<ConfigAggregate>& aggregates,
                                double weight_cost, double weight_nfe) {
  DecisionMatrix m;
  m.values.reserve(aggregates.size());
  for (const ConfigAggregate& a : aggregates) {
    m.values.push_back({a.mean_cost, a.mean_nfe});
  }
  m.weights = {weight_cost, weight_nfe};
  m.directions = {Direction::Minimize, Direction::Minimize};
  return topsis_rank(m).ranking.front();
}

}  // namespace nqopt
