#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "solver_impl.hpp"

namespace nqopt::detail {

namespace {

struct Colony {
  std::vector<double> x;
  int cost = 0;
};

struct Empire {
  std::vector<double> imp_x;
  int imp_cost = 0;
  std::vector<Colony> colonies;

  double total_power(double zeta) const {
    if (colonies.empty()) return imp_cost;
    double sum = 0.0;
    for (const Colony& c : colonies) sum += c.cost;
    return imp_cost + zeta * (sum / static_cast<double>(colonies.size()));
  }
};

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sq += d * d;
  }
  return std::sqrt(sq);
}

// Colony quota per empire, proportional to normalized power, summing to
// total exactly (floor + largest remainder, ties to the stronger empire).
std::vector<int> colony_quota(const std::vector<int>& imp_costs, int total) {
  const std::size_t k = imp_costs.size();
  std::vector<double> power(k, 0.0);
  const int worst = *std::max_element(imp_costs.begin(), imp_costs.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    power[i] = static_cast<double>(worst - imp_costs[i]);
    sum += power[i];
  }
  std::vector<double> share(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    share[i] = sum > 0.0 ? power[i] / sum : 1.0 / static_cast<double>(k);
  }
  std::vector<int> quota(k, 0);
  int assigned = 0;
  std::vector<std::pair<double, std::size_t>> remainder(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double ideal = share[i] * total;
    quota[i] = static_cast<int>(std::floor(ideal));
    assigned += quota[i];
    remainder[i] = {ideal - quota[i], i};
  }
  std::stable_sort(remainder.begin(), remainder.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int left = total - assigned; left > 0; --left) {
    ++quota[remainder[static_cast<std::size_t>(total - assigned - left)].second];
  }
  return quota;
}

}  // namespace

std::uint64_t run(int n, const IcaConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt) {
  const double hi = n - 1.0;
  const int total_agents = cfg.population;

  // Everyone starts as a plain candidate; the cheapest become imperialists.
  std::vector<Colony> founders;
  founders.reserve(static_cast<std::size_t>(total_agents));
  Placement decoded;
  for (int i = 0; i < total_agents && !eval.stopped(); ++i) {
    Colony c;
    c.x.resize(static_cast<std::size_t>(n));
    for (double& xd : c.x) xd = rng.uniform(0.0, hi);
    decode_continuous_into(c.x, n, decoded);
    c.cost = eval(decoded);
    founders.push_back(std::move(c));
  }
  if (static_cast<int>(founders.size()) < total_agents) return 0;  // budget spent in init

  std::vector<std::size_t> order(founders.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return founders[a].cost < founders[b].cost;
  });

  const int n_imp = cfg.imperialists;
  std::vector<Empire> empires(static_cast<std::size_t>(n_imp));
  std::vector<int> imp_costs(static_cast<std::size_t>(n_imp));
  for (int i = 0; i < n_imp; ++i) {
    Colony& f = founders[order[static_cast<std::size_t>(i)]];
    empires[static_cast<std::size_t>(i)].imp_x = std::move(f.x);
    empires[static_cast<std::size_t>(i)].imp_cost = f.cost;
    imp_costs[static_cast<std::size_t>(i)] = f.cost;
  }
  std::vector<std::size_t> pool(order.begin() + n_imp, order.end());
  rng.shuffle(pool);
  const std::vector<int> quota = colony_quota(imp_costs, static_cast<int>(pool.size()));
  std::size_t next = 0;
  for (int e = 0; e < n_imp; ++e) {
    for (int q = 0; q < quota[static_cast<std::size_t>(e)]; ++q) {
      empires[static_cast<std::size_t>(e)].colonies.push_back(
          std::move(founders[pool[next++]]));
    }
  }

  const double unite_distance = cfg.uniting_threshold * (n - 1.0) * std::sqrt(n);
  StopState stop;
  stop.note(eval.best_cost());
  std::uint64_t iter = 0;

  while (!eval.stopped() && !stop.exhausted(cfg.max_stall)) {
    // Assimilation, revolution, and the colony/imperialist swap.
    for (Empire& e : empires) {
      for (Colony& c : e.colonies) {
        if (eval.stopped()) break;
        for (std::size_t d = 0; d < c.x.size(); ++d) {
          c.x[d] += cfg.assimilation_coefficient * rng.uniform() * (e.imp_x[d] - c.x[d]);
          c.x[d] = std::clamp(c.x[d], 0.0, hi);
        }
        if (rng.bernoulli(cfg.revolution_rate)) {
          for (double& xd : c.x) xd = rng.uniform(0.0, hi);
        }
        decode_continuous_into(c.x, n, decoded);
        c.cost = eval(decoded);
        if (c.cost < e.imp_cost) {
          std::swap(c.x, e.imp_x);
          std::swap(c.cost, e.imp_cost);
        }
      }
      if (eval.stopped()) break;
    }

    if (!eval.stopped() && empires.size() > 1) {
      // Uniting: merge empires whose imperialists nearly coincide.
      bool merged = true;
      while (merged && empires.size() > 1) {
        merged = false;
        for (std::size_t i = 0; i + 1 < empires.size() && !merged; ++i) {
          for (std::size_t j = i + 1; j < empires.size() && !merged; ++j) {
            if (distance(empires[i].imp_x, empires[j].imp_x) >= unite_distance) continue;
            const std::size_t keep = empires[j].imp_cost < empires[i].imp_cost ? j : i;
            const std::size_t gone = keep == i ? j : i;
            Empire& k = empires[keep];
            Empire& g = empires[gone];
            k.colonies.push_back(Colony{std::move(g.imp_x), g.imp_cost});
            for (Colony& c : g.colonies) k.colonies.push_back(std::move(c));
            empires.erase(empires.begin() + static_cast<std::ptrdiff_t>(gone));
            merged = true;
          }
        }
      }
    }

    if (!eval.stopped() && empires.size() > 1) {
      // Competition: the weakest empire loses its weakest colony (or, with
      // none left, its imperialist) to a power-weighted roulette winner.
      std::vector<double> totals(empires.size());
      for (std::size_t e = 0; e < empires.size(); ++e) {
        totals[e] = empires[e].total_power(cfg.zeta);
      }
      const std::size_t weakest = static_cast<std::size_t>(
          std::max_element(totals.begin(), totals.end()) - totals.begin());

      Colony victim;
      bool collapse = empires[weakest].colonies.empty();
      if (collapse) {
        victim.x = std::move(empires[weakest].imp_x);
        victim.cost = empires[weakest].imp_cost;
      } else {
        auto& cols = empires[weakest].colonies;
        std::size_t worst = 0;
        for (std::size_t c = 1; c < cols.size(); ++c) {
          if (cols[c].cost > cols[worst].cost) worst = c;
        }
        victim = std::move(cols[worst]);
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(worst));
      }

      double weight_sum = 0.0;
      const double max_total = *std::max_element(totals.begin(), totals.end());
      std::vector<double> weights(empires.size(), 0.0);
      for (std::size_t e = 0; e < empires.size(); ++e) {
        if (e == weakest) continue;
        weights[e] = max_total - totals[e];
        weight_sum += weights[e];
      }
      std::size_t winner = 0;
      if (weight_sum <= 0.0) {
        // All contenders tied: first non-weakest empire takes it.
        winner = weakest == 0 ? 1 : 0;
      } else {
        const double pick = rng.uniform() * weight_sum;
        double acc = 0.0;
        winner = weakest == 0 ? 1 : 0;
        for (std::size_t e = 0; e < empires.size(); ++e) {
          if (e == weakest) continue;
          acc += weights[e];
          if (pick < acc) {
            winner = e;
            break;
          }
        }
      }
      empires[winner].colonies.push_back(std::move(victim));
      if (collapse) {
        empires.erase(empires.begin() + static_cast<std::ptrdiff_t>(weakest));
      }
    }

    stop.note(eval.best_cost());
    ++iter;
    report_iteration(opt, iter, eval, total_agents);
  }
  return iter;
}

}  // namespace nqopt::detail
