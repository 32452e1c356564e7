#include "nqopt/solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "solver_impl.hpp"

namespace nqopt {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Brado: return "brado";
    case Algorithm::Ga: return "ga";
    case Algorithm::Ica: return "ica";
    case Algorithm::Pso: return "pso";
    case Algorithm::Ils: return "ils";
    case Algorithm::Ls: return "ls";
    case Algorithm::Mls: return "mls";
  }
  return "?";
}

const char* display_name(Algorithm a) {
  switch (a) {
    case Algorithm::Brado: return "BRADO";
    case Algorithm::Ga: return "GA";
    case Algorithm::Ica: return "ICA";
    case Algorithm::Pso: return "PSO";
    case Algorithm::Ils: return "ILS";
    case Algorithm::Ls: return "LS";
    case Algorithm::Mls: return "MLS";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  for (Algorithm a : kAlgorithms) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

Algorithm algorithm_of(const AlgorithmConfig& config) {
  struct Visitor {
    Algorithm operator()(const BradoConfig&) const { return Algorithm::Brado; }
    Algorithm operator()(const GaConfig&) const { return Algorithm::Ga; }
    Algorithm operator()(const IcaConfig&) const { return Algorithm::Ica; }
    Algorithm operator()(const PsoConfig&) const { return Algorithm::Pso; }
    Algorithm operator()(const IlsConfig&) const { return Algorithm::Ils; }
    Algorithm operator()(const LsConfig&) const { return Algorithm::Ls; }
    Algorithm operator()(const MlsConfig&) const { return Algorithm::Mls; }
  };
  return std::visit(Visitor{}, config);
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Checker {
  ConfigCheck out;

  void error(const std::string& msg) { out.errors.push_back(msg); }
  void warn(const std::string& msg) { out.warnings.push_back(msg); }

  void require_positive(const char* name, int v) {
    if (v < 1) error(std::string(name) + " must be at least 1, got " + std::to_string(v));
  }
  void require_probability(const char* name, double v) {
    if (!(v >= 0.0 && v <= 1.0)) error(std::string(name) + " must lie in [0, 1], got " + fmt(v));
  }
  void require_nonnegative(const char* name, double v) {
    if (!(v >= 0.0)) error(std::string(name) + " must be non-negative, got " + fmt(v));
  }
  void range_hint(const char* name, double v, double lo, double hi) {
    if (v < lo || v > hi) {
      warn(std::string(name) + " = " + fmt(v) + " is outside the tuned range [" +
           fmt(lo) + ", " + fmt(hi) + "]");
    }
  }
};

ConfigCheck check(const BradoConfig& c) {
  Checker k;
  k.require_positive("stagnation_threshold", c.stagnation_threshold);
  k.require_nonnegative("best_neighbor_weight", c.best_neighbor_weight);
  k.require_nonnegative("worst_repulsion", c.worst_repulsion);
  k.require_positive("population", c.population);
  k.require_probability("edge_probability", c.edge_probability);
  k.require_probability("return_probability", c.return_probability);
  k.require_positive("countries", c.countries);
  k.require_positive("max_stall", c.max_stall);
  if (c.countries > c.population) {
    k.error("countries (" + std::to_string(c.countries) +
            ") cannot exceed population (" + std::to_string(c.population) + ")");
  }
  if (k.out.ok()) {
    k.range_hint("stagnation_threshold", c.stagnation_threshold, 10, 25);
    k.range_hint("best_neighbor_weight", c.best_neighbor_weight, 0.6, 0.9);
    k.range_hint("worst_repulsion", c.worst_repulsion, 0.1, 0.25);
    k.range_hint("population", c.population, 30, 90);
    k.range_hint("edge_probability", c.edge_probability, 0.6, 0.9);
    k.range_hint("return_probability", c.return_probability, 0.1, 0.2);
    k.range_hint("countries", c.countries, 5, 8);
    k.range_hint("max_stall", c.max_stall, 30, 150);
    if (c.countries == 1) k.warn("a single country disables migration");
  }
  return std::move(k.out);
}

ConfigCheck check(const GaConfig& c) {
  Checker k;
  k.require_positive("max_stall", c.max_stall);
  if (c.population < 2) {
    k.error("population must be at least 2, got " + std::to_string(c.population));
  }
  k.require_probability("crossover_probability", c.crossover_probability);
  if (!(c.survival_rate > 0.0 && c.survival_rate <= 1.0)) {
    k.error("survival_rate must lie in (0, 1], got " + fmt(c.survival_rate));
  }
  if (k.out.ok()) {
    k.range_hint("max_stall", c.max_stall, 30, 150);
    k.range_hint("population", c.population, 30, 100);
    k.range_hint("crossover_probability", c.crossover_probability, 0.1, 0.4);
    k.range_hint("survival_rate", c.survival_rate, 0.4, 0.7);
  }
  return std::move(k.out);
}

ConfigCheck check(const IcaConfig& c) {
  Checker k;
  k.require_probability("revolution_rate", c.revolution_rate);
  k.require_nonnegative("uniting_threshold", c.uniting_threshold);
  k.require_nonnegative("zeta", c.zeta);
  k.require_positive("population", c.population);
  k.require_nonnegative("assimilation_coefficient", c.assimilation_coefficient);
  k.require_positive("imperialists", c.imperialists);
  k.require_positive("max_stall", c.max_stall);
  if (c.imperialists >= c.population) {
    k.error("imperialists (" + std::to_string(c.imperialists) +
            ") must be fewer than population (" + std::to_string(c.population) + ")");
  }
  if (k.out.ok()) {
    k.range_hint("revolution_rate", c.revolution_rate, 0.2, 0.5);
    k.range_hint("uniting_threshold", c.uniting_threshold, 0.01, 0.04);
    k.range_hint("zeta", c.zeta, 0.01, 0.04);
    k.range_hint("population", c.population, 70, 100);
    k.range_hint("assimilation_coefficient", c.assimilation_coefficient, 1, 4);
    k.range_hint("imperialists", c.imperialists, 5, 8);
    k.range_hint("max_stall", c.max_stall, 30, 150);
  }
  return std::move(k.out);
}

ConfigCheck check(const PsoConfig& c) {
  Checker k;
  k.require_positive("max_stall", c.max_stall);
  k.require_positive("population", c.population);
  k.require_nonnegative("cognitive", c.cognitive);
  k.require_nonnegative("social", c.social);
  if (k.out.ok()) {
    k.range_hint("max_stall", c.max_stall, 30, 150);
    k.range_hint("population", c.population, 30, 100);
    k.range_hint("cognitive", c.cognitive, 0.5, 2);
    k.range_hint("social", c.social, 0.5, 2);
  }
  return std::move(k.out);
}

ConfigCheck check(const IlsConfig& c) {
  Checker k;
  if (c.init_method != InitMethod::UniformColumns &&
      c.init_method != InitMethod::RandomPermutation) {
    k.error("init_method must be 1 (uniform columns) or 2 (random permutation)");
  }
  k.require_positive("max_stall", c.max_stall);
  if (!(c.radius > 0.0)) k.error("radius must be positive, got " + fmt(c.radius));
  k.require_positive("restarts", c.restarts);
  if (k.out.ok()) {
    k.range_hint("max_stall", c.max_stall, 30, 150);
    k.range_hint("radius", c.radius, 0.2, 1);
    k.range_hint("restarts", c.restarts, 5, 20);
  }
  return std::move(k.out);
}

ConfigCheck check(const LsConfig& c) {
  Checker k;
  k.require_positive("max_stall", c.max_stall);
  if (!(c.radius > 0.0)) k.error("radius must be positive, got " + fmt(c.radius));
  if (k.out.ok()) {
    k.range_hint("max_stall", c.max_stall, 30, 150);
    k.range_hint("radius", c.radius, 0.2, 1);
  }
  return std::move(k.out);
}

ConfigCheck check(const MlsConfig& c) {
  Checker k;
  k.require_positive("max_stall", c.max_stall);
  if (!(c.radius > 0.0)) k.error("radius must be positive, got " + fmt(c.radius));
  k.require_positive("restarts", c.restarts);
  if (k.out.ok()) {
    k.range_hint("max_stall", c.max_stall, 30, 150);
    k.range_hint("radius", c.radius, 0.2, 1);
    k.range_hint("restarts", c.restarts, 5, 20);
  }
  return std::move(k.out);
}

}  // namespace

ConfigCheck validate_config(const AlgorithmConfig& config) {
  return std::visit([](const auto& c) { return check(c); }, config);
}

RunRecord solve(int n, const AlgorithmConfig& config, std::uint64_t seed,
                const SolveOptions& options) {
  if (n < 1) throw std::invalid_argument("board size must be at least 1");
  if (options.nfe_cap < 1) throw std::invalid_argument("nfe_cap must be at least 1");
  const ConfigCheck checked = validate_config(config);
  if (!checked.ok()) {
    std::string msg = "invalid configuration for ";
    msg += to_string(algorithm_of(config));
    for (const auto& e : checked.errors) {
      msg += "; ";
      msg += e;
    }
    throw std::invalid_argument(msg);
  }

  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  CostEvaluator eval(n, options.nfe_cap, options.on_evaluation);
  const std::uint64_t iterations = std::visit(
      [&](const auto& c) { return detail::run(n, c, rng, eval, options); }, config);
  const auto stop = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.algorithm = algorithm_of(config);
  rec.n = n;
  rec.seed = seed;
  rec.best = eval.best();
  rec.cost = eval.best_cost();
  rec.nfe = eval.nfe();
  rec.iterations = iterations;
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  rec.capped = eval.capped() && !eval.solved();
  return rec;
}

}  // namespace nqopt
