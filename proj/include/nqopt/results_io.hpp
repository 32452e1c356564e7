#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nqopt/harness.hpp"
#include "nqopt/version.hpp"

namespace nqopt {

inline constexpr const char* kResultsCsvName = "results.csv";
inline constexpr const char* kManifestName = "manifest.json";
inline constexpr const char* kResultsCsvHeader =
    "algorithm,n,phase,config_id,replication,seed,cost,nfe,iterations,"
    "elapsed_ms,capped";

// Winning configuration for one (algorithm, n) cell.
struct TunedEntry {
  Algorithm algorithm = Algorithm::Ls;
  int n = 0;
  int design_row = 0;
  AlgorithmConfig config;
};

struct RunManifest {
  int schema_version = kResultsSchemaVersion;
  std::string software_version = kVersion;
  std::string created;  // ISO 8601, informational only
  ExperimentPlan plan;
  std::string plan_digest;
  std::vector<std::pair<std::string, OrthogonalArray>> designs;  // by algorithm name
  std::vector<TunedEntry> tuned;

  const TunedEntry* find_tuned(Algorithm a, int n) const;
  void put_tuned(TunedEntry entry);  // replaces any previous (algorithm, n) entry
  void put_design(Algorithm a, const OrthogonalArray& design);
};

struct ResultsBundle {
  RunManifest manifest;
  std::vector<PhasedRecord> records;
};

// FNV-1a hash of the canonical JSON form of the plan, as fixed-width hex.
// Changing any plan field changes the digest.
std::string plan_digest(const ExperimentPlan& plan);

std::string current_timestamp();

// Writes manifest.json and results.csv into dir (created if missing),
// replacing existing files. Numbers round-trip exactly: doubles are written
// with shortest-exact formatting.
void write_results(const std::filesystem::path& dir, const RunManifest& manifest,
                   const std::vector<PhasedRecord>& records);

// Loads a results directory. Throws std::runtime_error when a file is
// missing or malformed, with the file and line in the message.
ResultsBundle read_results(const std::filesystem::path& dir);

// Plan file IO. read_plan throws std::runtime_error on unknown algorithm
// names, non-positive replication counts or sizes, or malformed JSON.
ExperimentPlan read_plan(const std::filesystem::path& file);
void write_plan(const std::filesystem::path& file, const ExperimentPlan& plan);
std::string plan_to_json(const ExperimentPlan& plan);
ExperimentPlan plan_from_json(const std::string& text);

}  // namespace nqopt
