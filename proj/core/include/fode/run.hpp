#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "fode/config.hpp"
#include "fode/statespace.hpp"

namespace fode {

/// `<csv>.meta.json`
std::filesystem::path metadata_path(const std::filesystem::path& csv);

struct RunOutcome {
  SimulationResult result;
  std::filesystem::path csv;
  std::filesystem::path metadata;
  double wall_seconds = 0.0;
};

/// Simulates the configured open or closed loop, then writes the CSV and
/// its JSON metadata sidecar (scheme, parameters, peak history bytes, wall
/// time). Throws InstabilityError, IoError or ConfigError.
RunOutcome run(const RunConfig& config);

/// Simulation only; nothing is written.
SimulationResult simulate(const RunConfig& config);

struct CompareReport {
  std::size_t rows = 0;
  double max_abs_dy = 0.0;
  double t_at_max = 0.0;
  std::optional<std::size_t> memory_a;
  std::optional<std::size_t> memory_b;

  /// memory_a / memory_b when both sidecars were found.
  std::optional<double> memory_ratio() const;
};

/// max |y_a - y_b| over the common rows of two trajectory CSVs, plus the
/// history-buffer figures from their sidecars when present.
CompareReport compare_runs(const std::filesystem::path& a, const std::filesystem::path& b);

}  // namespace fode

namespace fode {

/// Human-readable A, B, C, Q_R and rank, one item per line, numbers in
/// shortest round-trip form.
std::string controllability_text(const StateSpaceModel& ss, const ControllabilityReport& report);

}  // namespace fode
