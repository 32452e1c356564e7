#include "nqopt/results_io.hpp"

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <nlohmann/json.hpp>

#include "nqopt/design.hpp"

namespace nqopt {

namespace {

using nlohmann::json;

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json config_to_json(const AlgorithmConfig& config) {
  const Algorithm a = algorithm_of(config);
  const FactorGrid grid = tuning_grid(a);
  const std::vector<double> values = values_of(config);
  json j;
  j["algorithm"] = to_string(a);
  for (std::size_t i = 0; i < grid.factors.size(); ++i) {
    j[grid.factors[i].name] = values[i];
  }
  return j;
}

AlgorithmConfig config_from_json(const json& j) {
  const std::string name = j.at("algorithm").get<std::string>();
  const auto a = algorithm_from_string(name);
  if (!a) throw std::runtime_error("unknown algorithm '" + name + "' in config");
  const FactorGrid grid = tuning_grid(*a);
  std::vector<double> values;
  values.reserve(grid.factors.size());
  for (const Factor& f : grid.factors) {
    values.push_back(j.at(f.name).get<double>());
  }
  return config_from_values(*a, values);
}

json array_to_json(const OrthogonalArray& array) {
  json j;
  j["rows"] = array.rows;
  j["level_counts"] = array.level_counts;
  j["cells"] = array.cells;
  return j;
}

OrthogonalArray array_from_json(const json& j) {
  OrthogonalArray a;
  a.rows = j.at("rows").get<std::size_t>();
  a.level_counts = j.at("level_counts").get<std::vector<int>>();
  a.cells = j.at("cells").get<std::vector<std::vector<int>>>();
  if (a.cells.size() != a.rows) throw std::runtime_error("design row count mismatch");
  for (const auto& row : a.cells) {
    if (row.size() != a.level_counts.size()) {
      throw std::runtime_error("design column count mismatch");
    }
  }
  return a;
}

json plan_to_json_value(const ExperimentPlan& plan) {
  json j;
  json algorithms = json::array();
  for (Algorithm a : plan.algorithms) algorithms.push_back(to_string(a));
  j["algorithms"] = std::move(algorithms);
  j["sizes"] = plan.sizes;
  j["tuning_replications"] = plan.tuning_replications;
  j["validation_replications"] = plan.validation_replications;
  j["final_replications"] = plan.final_replications;
  j["master_seed"] = plan.master_seed;
  j["weights"] = {{"cost", plan.weight_cost}, {"nfe", plan.weight_nfe}};
  j["nfe_cap"] = plan.nfe_cap;
  return j;
}

ExperimentPlan plan_from_json_value(const json& j) {
  ExperimentPlan plan;
  plan.algorithms.clear();
  for (const auto& name : j.at("algorithms")) {
    const auto a = algorithm_from_string(name.get<std::string>());
    if (!a) {
      throw std::runtime_error("unknown algorithm '" + name.get<std::string>() +
                               "' in plan");
    }
    plan.algorithms.push_back(*a);
  }
  plan.sizes = j.at("sizes").get<std::vector<int>>();
  plan.tuning_replications = j.at("tuning_replications").get<int>();
  plan.validation_replications = j.at("validation_replications").get<int>();
  plan.final_replications = j.at("final_replications").get<int>();
  plan.master_seed = j.at("master_seed").get<std::uint64_t>();
  if (j.contains("weights")) {
    plan.weight_cost = j.at("weights").at("cost").get<double>();
    plan.weight_nfe = j.at("weights").at("nfe").get<double>();
  }
  if (j.contains("nfe_cap")) plan.nfe_cap = j.at("nfe_cap").get<std::uint64_t>();

  if (plan.algorithms.empty()) throw std::runtime_error("plan lists no algorithms");
  if (plan.sizes.empty()) throw std::runtime_error("plan lists no sizes");
  for (int n : plan.sizes) {
    if (n < 1) throw std::runtime_error("plan sizes must be positive");
  }
  if (plan.tuning_replications < 1 || plan.validation_replications < 1 ||
      plan.final_replications < 1) {
    throw std::runtime_error("plan replication counts must be positive");
  }
  if (plan.weight_cost < 0 || plan.weight_nfe < 0 ||
      plan.weight_cost + plan.weight_nfe <= 0) {
    throw std::runtime_error("plan weights must be non-negative and not both zero");
  }
  if (plan.nfe_cap < 1) throw std::runtime_error("plan nfe_cap must be positive");
  return plan;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
  if (!out) throw std::runtime_error("short write to " + file.string());
}

struct CsvLine {
  const std::filesystem::path& file;
  std::size_t number;
  std::vector<std::string> fields;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error(file.filename().string() + " line " +
                             std::to_string(number) + ": " + what);
  }

  const std::string& field(std::size_t i) const { return fields[i]; }

  long long integer(std::size_t i) const {
    long long v = 0;
    const auto& s = fields[i];
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      fail("expected an integer, got '" + s + "'");
    }
    return v;
  }

  std::uint64_t unsigned64(std::size_t i) const {
    std::uint64_t v = 0;
    const auto& s = fields[i];
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      fail("expected an unsigned integer, got '" + s + "'");
    }
    return v;
  }

  double real(std::size_t i) const {
    const auto& s = fields[i];
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) fail("expected a number, got '" + s + "'");
      return v;
    } catch (const std::exception&) {
      fail("expected a number, got '" + s + "'");
    }
  }
};

}  // namespace

const TunedEntry* RunManifest::find_tuned(Algorithm a, int n) const {
  for (const TunedEntry& e : tuned) {
    if (e.algorithm == a && e.n == n) return &e;
  }
  return nullptr;
}

void RunManifest::put_tuned(TunedEntry entry) {
  for (TunedEntry& e : tuned) {
    if (e.algorithm == entry.algorithm && e.n == entry.n) {
      e = std::move(entry);
      return;
    }
  }
  tuned.push_back(std::move(entry));
}

void RunManifest::put_design(Algorithm a, const OrthogonalArray& design) {
  const std::string name = to_string(a);
  for (auto& [key, value] : designs) {
    if (key == name) {
      value = design;
      return;
    }
  }
  designs.emplace_back(name, design);
}

std::string plan_digest(const ExperimentPlan& plan) {
  const std::string canonical = plan_to_json_value(plan).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string current_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string plan_to_json(const ExperimentPlan& plan) {
  return plan_to_json_value(plan).dump(2) + "\n";
}

ExperimentPlan plan_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed plan JSON: ") + e.what());
  }
  try {
    return plan_from_json_value(j);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("invalid plan: ") + e.what());
  }
}

ExperimentPlan read_plan(const std::filesystem::path& file) {
  try {
    return plan_from_json(read_file(file));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
}

void write_plan(const std::filesystem::path& file, const ExperimentPlan& plan) {
  write_file(file, plan_to_json(plan));
}

void write_results(const std::filesystem::path& dir, const RunManifest& manifest,
                   const std::vector<PhasedRecord>& records) {
  std::filesystem::create_directories(dir);

  json m;
  m["schema_version"] = manifest.schema_version;
  m["software_version"] = manifest.software_version;
  m["created"] = manifest.created;
  m["plan"] = plan_to_json_value(manifest.plan);
  m["plan_digest"] = manifest.plan_digest;
  json designs = json::object();
  for (const auto& [name, design] : manifest.designs) {
    designs[name] = array_to_json(design);
  }
  m["designs"] = std::move(designs);
  json tuned = json::array();
  for (const TunedEntry& e : manifest.tuned) {
    json t;
    t["algorithm"] = to_string(e.algorithm);
    t["n"] = e.n;
    t["design_row"] = e.design_row;
    t["config"] = config_to_json(e.config);
    tuned.push_back(std::move(t));
  }
  m["tuned"] = std::move(tuned);
  write_file(dir / kManifestName, m.dump(2) + "\n");

  std::string csv;
  csv.reserve(records.size() * 64 + 128);
  csv += kResultsCsvHeader;
  csv += '\n';
  for (const PhasedRecord& r : records) {
    csv += to_string(r.run.algorithm);
    csv += ',';
    csv += std::to_string(r.run.n);
    csv += ',';
    csv += to_string(r.phase);
    csv += ',';
    csv += std::to_string(r.config_id);
    csv += ',';
    csv += std::to_string(r.replication);
    csv += ',';
    csv += std::to_string(r.run.seed);
    csv += ',';
    csv += std::to_string(r.run.cost);
    csv += ',';
    csv += std::to_string(r.run.nfe);
    csv += ',';
    csv += std::to_string(r.run.iterations);
    csv += ',';
    csv += shortest(r.run.elapsed_ms);
    csv += ',';
    csv += r.run.capped ? '1' : '0';
    csv += '\n';
  }
  write_file(dir / kResultsCsvName, csv);
}

ResultsBundle read_results(const std::filesystem::path& dir) {
  ResultsBundle bundle;

  const std::filesystem::path manifest_file = dir / kManifestName;
  json m;
  try {
    m = json::parse(read_file(manifest_file));
  } catch (const json::exception& e) {
    throw std::runtime_error(manifest_file.string() + ": malformed JSON: " + e.what());
  }
  try {
    bundle.manifest.schema_version = m.at("schema_version").get<int>();
    if (bundle.manifest.schema_version != kResultsSchemaVersion) {
      throw std::runtime_error("unsupported schema_version " +
                               std::to_string(bundle.manifest.schema_version));
    }
    bundle.manifest.software_version = m.at("software_version").get<std::string>();
    bundle.manifest.created = m.value("created", std::string{});
    bundle.manifest.plan = plan_from_json_value(m.at("plan"));
    bundle.manifest.plan_digest = m.at("plan_digest").get<std::string>();
    for (const auto& [name, design] : m.at("designs").items()) {
      bundle.manifest.designs.emplace_back(name, array_from_json(design));
    }
    for (const auto& t : m.at("tuned")) {
      TunedEntry e;
      const std::string name = t.at("algorithm").get<std::string>();
      const auto a = algorithm_from_string(name);
      if (!a) throw std::runtime_error("unknown algorithm '" + name + "' in manifest");
      e.algorithm = *a;
      e.n = t.at("n").get<int>();
      e.design_row = t.at("design_row").get<int>();
      e.config = config_from_json(t.at("config"));
      bundle.manifest.tuned.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(manifest_file.string() + ": " + e.what());
  }

  const std::filesystem::path csv_file = dir / kResultsCsvName;
  std::istringstream in(read_file(csv_file));
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    CsvLine row{csv_file, number, {}};
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        row.fields.push_back(line.substr(start));
        break;
      }
      row.fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (number == 1) {
      if (line != kResultsCsvHeader) row.fail("unexpected header '" + line + "'");
      continue;
    }
    if (row.fields.size() != 11) {
      row.fail("expected 11 fields, got " + std::to_string(row.fields.size()));
    }
    PhasedRecord rec;
    const auto a = algorithm_from_string(row.field(0));
    if (!a) row.fail("unknown algorithm '" + row.field(0) + "'");
    rec.run.algorithm = *a;
    rec.run.n = static_cast<int>(row.integer(1));
    const auto phase = phase_from_string(row.field(2));
    if (!phase) row.fail("unknown phase '" + row.field(2) + "'");
    rec.phase = *phase;
    rec.config_id = static_cast<int>(row.integer(3));
    rec.replication = static_cast<int>(row.integer(4));
    rec.run.seed = row.unsigned64(5);
    rec.run.cost = static_cast<int>(row.integer(6));
    rec.run.nfe = row.unsigned64(7);
    rec.run.iterations = row.unsigned64(8);
    rec.run.elapsed_ms = row.real(9);
    const auto& capped = row.field(10);
    if (capped != "0" && capped != "1") row.fail("capped must be 0 or 1, got '" + capped + "'");
    rec.run.capped = capped == "1";
    bundle.records.push_back(std::move(rec));
  }
  return bundle;
}

}  // namespace nqopt
