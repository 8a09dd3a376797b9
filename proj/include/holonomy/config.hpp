#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"

namespace holonomy {

// The config is the experiment: every knob of every subcommand lives here,
// defaults embedded, so a run is reproducible from the file alone.

struct ModelConfig {
  std::string kind = "crossing";  // crossing | perturbed | floquet_map
  double epsilon = 0.1;           // perturbed only
  // Kick-map constants: H0 = h0_scale * (h0_axis . sigma), kick projector
  // (I + kick_axis . sigma)/2; axes are normalized internally.
  std::array<double, 3> h0_axis{0.0, 1.0, 0.0};
  double h0_scale = 0.5 * std::numbers::pi;
  std::array<double, 3> kick_axis{1.0, 0.0, 0.0};
};

struct CycleConfig {
  double lambda_start = 0.0;
  double lambda_end = 2.0 * std::numbers::pi;
  int samples = 401;
};

struct ScheduleConfig {
  std::string kind = "uniform";  // uniform | diabatic_window
  double total_time = 2000.0;
  double dt = 0.01;
  double window_half_width = 0.45;  // diabatic_window only; centre is pi
  double rate_multiplier = 22.0;    // sweep-rate factor inside the window
  int kicks = 10000;                // floquet_map only
};

struct SweepConfig {
  std::string axis = "epsilon";  // epsilon | rate | samples
  std::vector<double> values;    // empty: use the default grid for the axis
};

struct OutputConfig {
  std::string dir = "out";
  std::string format = "csv";  // csv | json
  int record_stride = 0;       // 0: auto (~2000 rows per time series)
};

struct ScenarioConfig {
  ModelConfig model;
  CycleConfig cycle;
  ScheduleConfig schedule;
  SweepConfig sweep;
  std::string initial_branch = "upper";  // upper | lower at lambda_start
  OutputConfig output;
  std::uint64_t seed = 42;  // reserved for randomized checks
};

/// Strict parse: unknown keys and malformed values throw ConfigError.
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ScenarioConfig& c);
ScenarioConfig load_config_file(const std::string& path);

/// Cross-field validation (kinds, ranges, finiteness); throws ConfigError.
void validate(const ScenarioConfig& c);

/// FNV-1a over the canonical JSON dump; recorded in every emitted file.
std::uint64_t config_hash(const ScenarioConfig& c);

std::vector<double> default_sweep_values(const std::string& axis);

}  // namespace holonomy
