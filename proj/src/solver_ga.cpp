#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "solver_impl.hpp"

namespace nqopt::detail {

namespace {

struct Member {
  Placement genes;
  int cost = 0;
};

// Binary tournament over the first pool_size members: draw two, keep the
// cheaper (the first draw on ties).
const Member& tournament(const std::vector<Member>& pop, int pool_size, Rng& rng) {
  const Member& a = pop[rng.index(static_cast<std::size_t>(pool_size))];
  const Member& b = pop[rng.index(static_cast<std::size_t>(pool_size))];
  return b.cost < a.cost ? b : a;
}

Placement make_child(const Member& a, const Member& b, int n,
                     const GaConfig& cfg, Rng& rng) {
  Placement child;
  if (n >= 2 && rng.bernoulli(cfg.crossover_probability)) {
    const int point = rng.uniform_int(1, n - 1);
    child.assign(a.genes.begin(), a.genes.begin() + point);
    child.insert(child.end(), b.genes.begin() + point, b.genes.end());
  } else {
    child = a.genes;
  }
  const double rate = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    if (rng.bernoulli(rate)) child[static_cast<std::size_t>(i)] = rng.uniform_int(0, n - 1);
  }
  return child;
}

}  // namespace

std::uint64_t run(int n, const GaConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt) {
  const int pop_size = cfg.population;
  const int elite_count = std::min(
      pop_size, static_cast<int>(std::ceil(cfg.survival_rate * pop_size)));

  std::vector<Member> pop;
  pop.reserve(static_cast<std::size_t>(pop_size));
  for (int i = 0; i < pop_size && !eval.stopped(); ++i) {
    Member m;
    m.genes = random_placement(n, InitMethod::UniformColumns, rng);
    m.cost = eval(m.genes);
    pop.push_back(std::move(m));
  }

  StopState stop;
  stop.note(eval.best_cost());
  std::uint64_t iter = 0;
  std::vector<Member> next;
  next.reserve(static_cast<std::size_t>(pop_size));
  while (!eval.stopped() && !stop.exhausted(cfg.max_stall)) {
    // Survivors first (stable order on ties), then tournament offspring.
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Member& a, const Member& b) { return a.cost < b.cost; });
    next.clear();
    for (int i = 0; i < elite_count; ++i) next.push_back(pop[static_cast<std::size_t>(i)]);
    while (static_cast<int>(next.size()) < pop_size) {
      const Member& a = tournament(pop, elite_count, rng);
      const Member& b = tournament(pop, elite_count, rng);
      next.push_back(Member{make_child(a, b, n, cfg, rng), 0});
    }
    // The whole generation is (re)costed, survivors included.
    for (Member& m : next) {
      if (eval.stopped()) break;
      m.cost = eval(m.genes);
    }
    pop.swap(next);
    stop.note(eval.best_cost());
    ++iter;
    report_iteration(opt, iter, eval, pop_size);
  }
  return iter;
}

}  // namespace nqopt::detail
