#include "nqopt/design.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace nqopt {

namespace {

// 16-run array, five four-level columns, strength 2: every ordered pair of
// columns shows each of the 16 level combinations exactly once.
constexpr std::array<std::array<int, 5>, 16> kArray16{{
    {{0, 0, 0, 0, 0}}, {{0, 1, 1, 2, 3}}, {{0, 2, 2, 3, 1}}, {{0, 3, 3, 1, 2}},
    {{1, 0, 1, 1, 1}}, {{1, 1, 0, 3, 2}}, {{1, 2, 3, 2, 0}}, {{1, 3, 2, 0, 3}},
    {{2, 0, 2, 2, 2}}, {{2, 1, 3, 0, 1}}, {{2, 2, 0, 1, 3}}, {{2, 3, 1, 3, 0}},
    {{3, 0, 3, 3, 3}}, {{3, 1, 2, 1, 0}}, {{3, 2, 1, 0, 2}}, {{3, 3, 0, 2, 1}},
}};

// 32-run array: column 0 carries two levels, columns 1..9 four levels.
// Strength 2 across every column pair, the mixed ones included.
constexpr std::array<std::array<int, 10>, 32> kArray32{{
    {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}, {{0, 2, 0, 2, 0, 2, 3, 2, 3, 1}},
    {{1, 1, 0, 1, 2, 3, 0, 2, 1, 3}}, {{1, 3, 0, 3, 2, 1, 3, 0, 2, 2}},
    {{0, 0, 2, 2, 2, 2, 0, 1, 2, 3}}, {{0, 2, 2, 0, 2, 0, 3, 3, 1, 2}},
    {{1, 1, 2, 3, 0, 1, 0, 3, 3, 0}}, {{1, 3, 2, 1, 0, 3, 3, 1, 0, 1}},
    {{1, 0, 1, 1, 0, 0, 2, 2, 2, 2}}, {{1, 2, 1, 3, 0, 2, 1, 0, 1, 3}},
    {{0, 1, 1, 0, 2, 3, 2, 0, 3, 1}}, {{0, 3, 1, 2, 2, 1, 1, 2, 0, 0}},
    {{1, 0, 3, 3, 2, 2, 2, 3, 0, 1}}, {{1, 2, 3, 1, 2, 0, 1, 1, 3, 0}},
    {{0, 1, 3, 2, 0, 1, 2, 1, 1, 2}}, {{0, 3, 3, 0, 0, 3, 1, 3, 2, 3}},
    {{1, 0, 0, 0, 1, 1, 1, 1, 1, 1}}, {{1, 2, 0, 2, 1, 3, 2, 3, 2, 0}},
    {{0, 1, 0, 1, 3, 2, 1, 3, 0, 2}}, {{0, 3, 0, 3, 3, 0, 2, 1, 3, 3}},
    {{1, 0, 2, 2, 3, 3, 1, 0, 3, 2}}, {{1, 2, 2, 0, 3, 1, 2, 2, 0, 3}},
    {{0, 1, 2, 3, 1, 0, 1, 2, 2, 1}}, {{0, 3, 2, 1, 1, 2, 2, 0, 1, 0}},
    {{0, 0, 1, 1, 1, 1, 3, 3, 3, 3}}, {{0, 2, 1, 3, 1, 3, 0, 1, 0, 2}},
    {{1, 1, 1, 0, 3, 2, 3, 1, 2, 0}}, {{1, 3, 1, 2, 3, 0, 0, 3, 1, 1}},
    {{0, 0, 3, 3, 3, 3, 3, 2, 1, 0}}, {{0, 2, 3, 1, 3, 1, 0, 0, 2, 1}},
    {{1, 1, 3, 2, 1, 0, 3, 0, 0, 3}}, {{1, 3, 3, 0, 1, 2, 0, 2, 3, 2}},
}};

OrthogonalArray make_array16() {
  OrthogonalArray a;
  a.rows = kArray16.size();
  a.level_counts.assign(5, 4);
  a.cells.reserve(a.rows);
  for (const auto& row : kArray16) a.cells.emplace_back(row.begin(), row.end());
  return a;
}

OrthogonalArray make_array32() {
  OrthogonalArray a;
  a.rows = kArray32.size();
  a.level_counts.assign(10, 4);
  a.level_counts[0] = 2;
  a.cells.reserve(a.rows);
  for (const auto& row : kArray32) a.cells.emplace_back(row.begin(), row.end());
  return a;
}

Factor factor(const char* name, std::vector<double> levels) {
  return Factor{name, std::move(levels)};
}

}  // namespace

const OrthogonalArray& embedded_array16() {
  static const OrthogonalArray a = make_array16();
  return a;
}

const OrthogonalArray& embedded_array32() {
  static const OrthogonalArray a = make_array32();
  return a;
}

std::size_t FactorGrid::full_factorial_size() const {
  std::size_t total = 1;
  for (const Factor& f : factors) total *= f.levels.size();
  return total;
}

FactorGrid tuning_grid(Algorithm a) {
  FactorGrid g;
  g.algorithm = a;
  switch (a) {
    case Algorithm::Brado:
      g.factors = {
          factor("stagnation_threshold", {10, 15, 20, 25}),
          factor("best_neighbor_weight", {0.6, 0.7, 0.8, 0.9}),
          factor("worst_repulsion", {0.1, 0.15, 0.2, 0.25}),
          factor("population", {30, 50, 70, 90}),
          factor("edge_probability", {0.6, 0.7, 0.8, 0.9}),
          factor("return_probability", {0.1, 0.2}),
          factor("countries", {5, 6, 7, 8}),
          factor("max_stall", {30, 70, 100, 150}),
      };
      break;
    case Algorithm::Ga:
      g.factors = {
          factor("max_stall", {30, 70, 100, 150}),
          factor("population", {30, 50, 80, 100}),
          factor("crossover_probability", {0.1, 0.2, 0.3, 0.4}),
          factor("survival_rate", {0.4, 0.5, 0.6, 0.7}),
      };
      break;
    case Algorithm::Ica:
      g.factors = {
          factor("revolution_rate", {0.2, 0.3, 0.4, 0.5}),
          factor("uniting_threshold", {0.01, 0.02, 0.03, 0.04}),
          factor("zeta", {0.01, 0.02, 0.03, 0.04}),
          factor("population", {70, 80, 90, 100}),
          factor("assimilation_coefficient", {1, 2, 3, 4}),
          factor("imperialists", {5, 6, 7, 8}),
          factor("max_stall", {30, 70, 100, 150}),
      };
      break;
    case Algorithm::Pso:
      g.factors = {
          factor("max_stall", {30, 70, 100, 150}),
          factor("population", {30, 50, 80, 100}),
          factor("cognitive", {0.5, 1, 1.5, 2}),
          factor("social", {0.5, 1, 1.5, 2}),
      };
      break;
    case Algorithm::Ils:
      g.factors = {
          factor("init_method", {1, 2}),
          factor("max_stall", {30, 70, 100, 150}),
          factor("radius", {0.2, 0.5, 0.8, 1}),
          factor("restarts", {5, 10, 15, 20}),
      };
      break;
    case Algorithm::Ls:
      g.factors = {
          factor("max_stall", {30, 70, 100, 150}),
          factor("radius", {0.2, 0.5, 0.8, 1}),
      };
      break;
    case Algorithm::Mls:
      g.factors = {
          factor("max_stall", {30, 70, 100, 150}),
          factor("radius", {0.2, 0.5, 0.8, 1}),
          factor("restarts", {5, 10, 15, 20}),
      };
      break;
  }
  return g;
}

OrthogonalArray build_design(const FactorGrid& grid) {
  std::size_t two_level = 0;
  std::size_t four_level = 0;
  for (const Factor& f : grid.factors) {
    if (f.levels.size() == 2) {
      ++two_level;
    } else if (f.levels.size() == 4) {
      ++four_level;
    } else {
      throw std::invalid_argument("factor '" + f.name + "' must have 2 or 4 levels, has " +
                                  std::to_string(f.levels.size()));
    }
  }

  const OrthogonalArray* base = nullptr;
  bool dedicated_two = false;
  if (two_level == 0 && four_level <= 5) {
    base = &embedded_array16();
  } else if (four_level + (two_level > 0 ? two_level - 1 : 0) <= 9) {
    base = &embedded_array32();
    dedicated_two = two_level > 0;
  } else {
    throw std::invalid_argument("factor profile does not fit the embedded designs (" +
                                std::to_string(two_level) + " two-level, " +
                                std::to_string(four_level) + " four-level)");
  }

  // Map each factor to a source column: the first two-level factor takes the
  // dedicated two-level column when present; everything else consumes
  // four-level columns in order, folding 0,1,2,3 -> 0,1,0,1 for the extra
  // two-level factors.
  const std::size_t first_four = base == &embedded_array32() ? 1 : 0;
  std::size_t next_four = first_four;
  bool dedicated_used = false;
  struct Source {
    std::size_t column;
    bool fold;
  };
  std::vector<Source> sources;
  sources.reserve(grid.factors.size());
  for (const Factor& f : grid.factors) {
    if (f.levels.size() == 2) {
      if (dedicated_two && !dedicated_used) {
        sources.push_back({0, false});
        dedicated_used = true;
      } else {
        sources.push_back({next_four++, true});
      }
    } else {
      sources.push_back({next_four++, false});
    }
  }

  OrthogonalArray out;
  out.rows = base->rows;
  out.level_counts.reserve(grid.factors.size());
  for (const Factor& f : grid.factors) {
    out.level_counts.push_back(static_cast<int>(f.levels.size()));
  }
  out.cells.assign(out.rows, std::vector<int>(grid.factors.size(), 0));
  for (std::size_t r = 0; r < out.rows; ++r) {
    for (std::size_t c = 0; c < sources.size(); ++c) {
      const int raw = base->cells[r][sources[c].column];
      out.cells[r][c] = sources[c].fold ? raw % 2 : raw;
    }
  }
  return out;
}

std::vector<AlgorithmConfig> expand_design(const OrthogonalArray& array,
                                           const FactorGrid& grid) {
  if (array.columns() != grid.factors.size()) {
    throw std::invalid_argument("design has " + std::to_string(array.columns()) +
                                " columns for " + std::to_string(grid.factors.size()) +
                                " factors");
  }
  std::vector<AlgorithmConfig> configs;
  configs.reserve(array.rows);
  std::vector<double> values(grid.factors.size(), 0.0);
  for (std::size_t r = 0; r < array.rows; ++r) {
    for (std::size_t c = 0; c < grid.factors.size(); ++c) {
      values[c] = grid.factors[c].levels[static_cast<std::size_t>(array.cells[r][c])];
    }
    configs.push_back(config_from_values(grid.algorithm, values));
  }
  return configs;
}

namespace {

int as_int(double v) { return static_cast<int>(std::lround(v)); }

void need(std::size_t got, std::size_t want, Algorithm a) {
  if (got != want) {
    throw std::invalid_argument(std::string("expected ") + std::to_string(want) +
                                " parameter values for " + to_string(a) + ", got " +
                                std::to_string(got));
  }
}

}  // namespace

AlgorithmConfig config_from_values(Algorithm a, const std::vector<double>& v) {
  switch (a) {
    case Algorithm::Brado: {
      need(v.size(), 8, a);
      BradoConfig c;
      c.stagnation_threshold = as_int(v[0]);
      c.best_neighbor_weight = v[1];
      c.worst_repulsion = v[2];
      c.population = as_int(v[3]);
      c.edge_probability = v[4];
      c.return_probability = v[5];
      c.countries = as_int(v[6]);
      c.max_stall = as_int(v[7]);
      return c;
    }
    case Algorithm::Ga: {
      need(v.size(), 4, a);
      GaConfig c;
      c.max_stall = as_int(v[0]);
      c.population = as_int(v[1]);
      c.crossover_probability = v[2];
      c.survival_rate = v[3];
      return c;
    }
    case Algorithm::Ica: {
      need(v.size(), 7, a);
      IcaConfig c;
      c.revolution_rate = v[0];
      c.uniting_threshold = v[1];
      c.zeta = v[2];
      c.population = as_int(v[3]);
      c.assimilation_coefficient = v[4];
      c.imperialists = as_int(v[5]);
      c.max_stall = as_int(v[6]);
      return c;
    }
    case Algorithm::Pso: {
      need(v.size(), 4, a);
      PsoConfig c;
      c.max_stall = as_int(v[0]);
      c.population = as_int(v[1]);
      c.cognitive = v[2];
      c.social = v[3];
      return c;
    }
    case Algorithm::Ils: {
      need(v.size(), 4, a);
      IlsConfig c;
      c.init_method = as_int(v[0]) == 2 ? InitMethod::RandomPermutation
                                        : InitMethod::UniformColumns;
      c.max_stall = as_int(v[1]);
      c.radius = v[2];
      c.restarts = as_int(v[3]);
      return c;
    }
    case Algorithm::Ls: {
      need(v.size(), 2, a);
      LsConfig c;
      c.max_stall = as_int(v[0]);
      c.radius = v[1];
      return c;
    }
    case Algorithm::Mls: {
      need(v.size(), 3, a);
      MlsConfig c;
      c.max_stall = as_int(v[0]);
      c.radius = v[1];
      c.restarts = as_int(v[2]);
      return c;
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

std::vector<double> values_of(const AlgorithmConfig& config) {
  struct Visitor {
    std::vector<double> operator()(const BradoConfig& c) const {
      return {static_cast<double>(c.stagnation_threshold), c.best_neighbor_weight,
              c.worst_repulsion, static_cast<double>(c.population),
              c.edge_probability, c.return_probability,
              static_cast<double>(c.countries), static_cast<double>(c.max_stall)};
    }
    std::vector<double> operator()(const GaConfig& c) const {
      return {static_cast<double>(c.max_stall), static_cast<double>(c.population),
              c.crossover_probability, c.survival_rate};
    }
    std::vector<double> operator()(const IcaConfig& c) const {
      return {c.revolution_rate, c.uniting_threshold, c.zeta,
              static_cast<double>(c.population), c.assimilation_coefficient,
              static_cast<double>(c.imperialists), static_cast<double>(c.max_stall)};
    }
    std::vector<double> operator()(const PsoConfig& c) const {
      return {static_cast<double>(c.max_stall), static_cast<double>(c.population),
              c.cognitive, c.social};
    }
    std::vector<double> operator()(const IlsConfig& c) const {
      return {c.init_method == InitMethod::RandomPermutation ? 2.0 : 1.0,
              static_cast<double>(c.max_stall), c.radius,
              static_cast<double>(c.restarts)};
    }
    std::vector<double> operator()(const LsConfig& c) const {
      return {static_cast<double>(c.max_stall), c.radius};
    }
    std::vector<double> operator()(const MlsConfig& c) const {
      return {static_cast<double>(c.max_stall), c.radius,
              static_cast<double>(c.restarts)};
    }
  };
  return std::visit(Visitor{}, config);
}

}  // namespace nqopt
