// Python bindings for the core operations: cost evaluation, the seven
// solvers, configuration helpers, the ranking stage, and the self checks.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nqopt/design.hpp"
#include "nqopt/presets.hpp"
#include "nqopt/problem.hpp"
#include "nqopt/solver.hpp"
#include "nqopt/topsis.hpp"
#include "nqopt/verify.hpp"
#include "nqopt/version.hpp"

namespace py = pybind11;
using namespace nqopt;

namespace {

Algorithm parse_algorithm(const std::string& name) {
  const std::optional<Algorithm> a = algorithm_from_string(name);
  if (!a) throw std::invalid_argument("unknown algorithm: " + name);
  return *a;
}

AlgorithmConfig default_config_for(Algorithm a) {
  switch (a) {
    case Algorithm::Brado: return BradoConfig{};
    case Algorithm::Ga: return GaConfig{};
    case Algorithm::Ica: return IcaConfig{};
    case Algorithm::Pso: return PsoConfig{};
    case Algorithm::Ils: return IlsConfig{};
    case Algorithm::Ls: return LsConfig{};
    case Algorithm::Mls: return MlsConfig{};
  }
  throw std::invalid_argument("unknown algorithm id");
}

py::dict dict_from_config(const AlgorithmConfig& config) {
  const FactorGrid grid = tuning_grid(algorithm_of(config));
  const std::vector<double> values = values_of(config);
  py::dict out;
  for (std::size_t i = 0; i < grid.factors.size(); ++i) {
    out[py::str(grid.factors[i].name)] = values[i];
  }
  return out;
}

AlgorithmConfig config_from_dict(Algorithm a, const py::dict& overrides) {
  const FactorGrid grid = tuning_grid(a);
  std::vector<double> values = values_of(default_config_for(a));
  for (const auto& item : overrides) {
    const std::string key = py::cast<std::string>(item.first);
    const double value = py::cast<double>(item.second);
    bool known = false;
    for (std::size_t i = 0; i < grid.factors.size(); ++i) {
      if (grid.factors[i].name == key) {
        values[i] = value;
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument("unknown parameter for " +
                                  std::string(to_string(a)) + ": " + key);
    }
  }
  return config_from_values(a, values);
}

py::dict dict_from_run(const RunRecord& run) {
  py::dict out;
  out["algorithm"] = std::string(to_string(run.algorithm));
  out["n"] = run.n;
  out["seed"] = run.seed;
  out["best"] = run.best;
  out["cost"] = run.cost;
  out["nfe"] = run.nfe;
  out["iterations"] = run.iterations;
  out["elapsed_ms"] = run.elapsed_ms;
  out["capped"] = run.capped;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "n-queens optimization workbench core";
  m.attr("__version__") = kVersion;

  m.def("evaluate_cost", [](const std::vector<int>& placement) {
    return evaluate_cost(placement);
  },
        py::arg("placement"),
        "Clash count of a board given as one column index per row.");

  m.def("max_cost", &max_cost, py::arg("n"),
        "Upper bound on the clash count of any n-queens board.");

  m.def("algorithms", [] {
    std::vector<std::string> names;
    for (Algorithm a : kAlgorithms) names.emplace_back(to_string(a));
    return names;
  },
        "Names of the available solvers.");

  m.def("default_config", [](const std::string& algorithm) {
    return dict_from_config(default_config_for(parse_algorithm(algorithm)));
  },
        py::arg("algorithm"),
        "Default parameter values of one solver, keyed by parameter name.");

  m.def("reference_config", [](const std::string& algorithm, int n) -> py::object {
    const std::optional<AlgorithmConfig> config =
        reference_config(parse_algorithm(algorithm), n);
    if (!config) return py::none();
    return dict_from_config(*config);
  },
        py::arg("algorithm"), py::arg("n"),
        "Pre-tuned parameters for one solver at one board size, or None.");

  m.def("reference_sizes", [] { return reference_sizes(); },
        "Board sizes covered by the pre-tuned configurations.");

  m.def("tuning_factors", [](const std::string& algorithm) {
    const FactorGrid grid = tuning_grid(parse_algorithm(algorithm));
    std::vector<std::pair<std::string, std::vector<double>>> factors;
    for (const Factor& f : grid.factors) factors.emplace_back(f.name, f.levels);
    return factors;
  },
        py::arg("algorithm"),
        "Tunable parameters of one solver and their candidate levels.");

  m.def("solve",
        [](const std::string& algorithm, int n, std::uint64_t seed,
           const std::optional<py::dict>& config, std::uint64_t nfe_cap) {
          const Algorithm a = parse_algorithm(algorithm);
          AlgorithmConfig full;
          if (config) {
            full = config_from_dict(a, *config);
          } else {
            const std::optional<AlgorithmConfig> preset = reference_config(a, n);
            full = preset ? *preset : default_config_for(a);
          }
          SolveOptions options;
          options.nfe_cap = nfe_cap;
          return dict_from_run(solve(n, full, seed, options));
        },
        py::arg("algorithm"), py::arg("n"), py::arg("seed"),
        py::arg("config") = std::nullopt, py::arg("nfe_cap") = 1'000'000,
        "Runs one solver on an n-queens instance. config overrides individual\n"
        "parameters; without it the pre-tuned values for that board size are\n"
        "used when available, the defaults otherwise. Deterministic in\n"
        "(algorithm, n, seed, config, nfe_cap).");

  m.def("topsis_rank",
        [](const std::vector<std::vector<double>>& values,
           const std::vector<double>& weights,
           const std::vector<std::string>& directions) {
          DecisionMatrix matrix;
          matrix.values = values;
          matrix.weights = weights;
          for (const std::string& d : directions) {
            if (d == "min") {
              matrix.directions.push_back(Direction::Minimize);
            } else if (d == "max") {
              matrix.directions.push_back(Direction::Maximize);
            } else {
              throw std::invalid_argument("direction must be 'min' or 'max'");
            }
          }
          const TopsisResult result = topsis_rank(matrix);
          py::dict out;
          out["closeness"] = result.closeness;
          out["ranking"] = result.ranking;
          return out;
        },
        py::arg("values"), py::arg("weights"), py::arg("directions"),
        "Ranks alternatives by similarity to the ideal solution. directions\n"
        "holds 'min' or 'max' per criterion; best alternative first.");

  m.def("self_check", [] {
    std::vector<py::dict> results;
    for (const CheckResult& check : run_verification_suite()) {
      py::dict entry;
      entry["name"] = check.name;
      entry["pass"] = check.pass;
      entry["detail"] = check.detail;
      results.push_back(std::move(entry));
    }
    return results;
  },
        "Runs the built-in verification suite; one entry per check.");
}
