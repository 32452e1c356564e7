#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "solver_impl.hpp"

namespace nqopt::detail {

namespace {

struct Agent {
  std::vector<double> x;
  int cost = 0;
  int stagnation = 0;
  int country = 0;
  int origin = 0;
  bool pending_return = false;
};

// Erdős–Rényi graph over the countries, resampled until connected. A bounded
// number of attempts; afterwards a ring is laid over the last sample so the
// run can proceed (only reachable with extreme edge probabilities).
std::vector<std::vector<int>> sample_country_graph(int countries, double edge_probability,
                                                   Rng& rng) {
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(countries));
  if (countries <= 1) return adjacency;
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (auto& list : adjacency) list.clear();
    for (int i = 0; i < countries; ++i) {
      for (int j = i + 1; j < countries; ++j) {
        if (rng.bernoulli(edge_probability)) {
          adjacency[static_cast<std::size_t>(i)].push_back(j);
          adjacency[static_cast<std::size_t>(j)].push_back(i);
        }
      }
    }
    std::vector<char> seen(static_cast<std::size_t>(countries), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacency[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached == countries) return adjacency;
  }
  for (int i = 0; i < countries; ++i) {
    const int j = (i + 1) % countries;
    auto& a = adjacency[static_cast<std::size_t>(i)];
    auto& b = adjacency[static_cast<std::size_t>(j)];
    if (std::find(a.begin(), a.end(), j) == a.end()) {
      a.push_back(j);
      b.push_back(i);
    }
  }
  return adjacency;
}

}  // namespace

std::uint64_t run(int n, const BradoConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt) {
  const double hi = n - 1.0;
  const int countries = cfg.countries;
  const auto adjacency = sample_country_graph(countries, cfg.edge_probability, rng);

  std::vector<Agent> agents;
  agents.reserve(static_cast<std::size_t>(cfg.population));
  Placement decoded;
  for (int i = 0; i < cfg.population && !eval.stopped(); ++i) {
    Agent a;
    a.x.resize(static_cast<std::size_t>(n));
    for (double& xd : a.x) xd = rng.uniform(0.0, hi);
    decode_continuous_into(a.x, n, decoded);
    a.cost = eval(decoded);
    a.country = i % countries;
    a.origin = a.country;
    agents.push_back(std::move(a));
  }
  if (static_cast<int>(agents.size()) < cfg.population) return 0;

  StopState stop;
  stop.note(eval.best_cost());
  std::uint64_t iter = 0;

  std::vector<int> best_of(static_cast<std::size_t>(countries));
  std::vector<int> worst_of(static_cast<std::size_t>(countries));
  std::vector<std::vector<double>> best_x(static_cast<std::size_t>(countries));
  std::vector<std::vector<double>> worst_x(static_cast<std::size_t>(countries));
  std::vector<double> scratch;

  const auto country_mean = [&](int country) {
    double sum = 0.0;
    int count = 0;
    for (const Agent& a : agents) {
      if (a.country == country) {
        sum += a.cost;
        ++count;
      }
    }
    return count > 0 ? sum / count : std::numeric_limits<double>::infinity();
  };

  while (!eval.stopped() && !stop.exhausted(cfg.max_stall)) {
    // Snapshot each country's attractors so everyone moves in the same field.
    std::fill(best_of.begin(), best_of.end(), -1);
    std::fill(worst_of.begin(), worst_of.end(), -1);
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const Agent& a = agents[i];
      const std::size_t c = static_cast<std::size_t>(a.country);
      if (best_of[c] < 0 || a.cost < agents[static_cast<std::size_t>(best_of[c])].cost) {
        best_of[c] = static_cast<int>(i);
      }
      if (worst_of[c] < 0 || a.cost > agents[static_cast<std::size_t>(worst_of[c])].cost) {
        worst_of[c] = static_cast<int>(i);
      }
    }
    for (int c = 0; c < countries; ++c) {
      const std::size_t ci = static_cast<std::size_t>(c);
      if (best_of[ci] >= 0) {
        best_x[ci] = agents[static_cast<std::size_t>(best_of[ci])].x;
        worst_x[ci] = agents[static_cast<std::size_t>(worst_of[ci])].x;
      }
    }

    // Each agent proposes one move: a blend toward the local elite plus a
    // fixed-scale step away from the local worst on a few sampled
    // coordinates. Dense proportional terms fail both ways: they either
    // contract the population to a point or change so many columns per
    // proposal that nothing is ever accepted. Worsening proposals are
    // evaluated but rolled back, feeding the agent's stagnation counter.
    for (Agent& a : agents) {
      if (eval.stopped()) break;
      const std::size_t c = static_cast<std::size_t>(a.country);
      const auto& bx = best_x[c];
      const auto& wx = worst_x[c];
      scratch = a.x;
      for (std::size_t d = 0; d < a.x.size(); ++d) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform() * n < 3.0 ? rng.uniform() : 0.0;
        const double gap = a.x[d] - wx[d];
        const double away =
            gap > 0.0 ? 1.0 : gap < 0.0 ? -1.0 : (rng.bernoulli(0.5) ? 1.0 : -1.0);
        a.x[d] += cfg.best_neighbor_weight * r1 * (bx[d] - a.x[d]) +
                  cfg.worst_repulsion * r2 * away;
        a.x[d] = std::clamp(a.x[d], 0.0, hi);
      }
      decode_continuous_into(a.x, n, decoded);
      const int moved_cost = eval(decoded);
      if (moved_cost < a.cost) {
        a.cost = moved_cost;
        a.stagnation = 0;
      } else {
        a.x = scratch;
        ++a.stagnation;
      }
    }

    // Migration: a pending emigrant may return home; a brain whose counter
    // reached the threshold leaves for the best-performing adjacent country
    // and resumes from that country's elite with one column resampled,
    // trading a stale position for a fresh viewpoint near a good one.
    for (Agent& a : agents) {
      if (eval.stopped()) break;
      if (a.pending_return) {
        if (rng.bernoulli(cfg.return_probability)) a.country = a.origin;
        a.pending_return = false;
        continue;
      }
      if (a.stagnation < cfg.stagnation_threshold) continue;
      int dest = a.country;
      if (countries > 1) {
        int picked = -1;
        double dest_mean = std::numeric_limits<double>::infinity();
        for (int nb : adjacency[static_cast<std::size_t>(a.country)]) {
          const double mean = country_mean(nb);
          if (mean < dest_mean) {
            dest_mean = mean;
            picked = nb;
          }
        }
        if (picked >= 0) {
          a.origin = a.country;
          a.country = picked;
          a.pending_return = true;
          dest = picked;
        }
      }
      const std::size_t di = static_cast<std::size_t>(dest);
      if (best_of[di] >= 0) {
        a.x = best_x[di];
      } else {
        for (double& xd : a.x) xd = rng.uniform(0.0, hi);
      }
      a.x[static_cast<std::size_t>(rng.uniform_int(0, n - 1))] = rng.uniform(0.0, hi);
      decode_continuous_into(a.x, n, decoded);
      a.cost = eval(decoded);
      a.stagnation = 0;
    }

    stop.note(eval.best_cost());
    ++iter;
    report_iteration(opt, iter, eval, cfg.population);
  }
  return iter;
}

}  // namespace nqopt::detail
