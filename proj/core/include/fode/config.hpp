#pragma once

// Flat `key = value` run configuration. `#` starts a comment; blank lines are
// ignored. Keys:
//
//   a2 a1 a0 alpha beta T          required
//   scheme          pse | cfe      (default pse)
//   memory_samples  integer >= 1   (pse only, default 100)
//   n_steps         integer >= 1   (default 300)
//   input           step | zero | file:<path>   (default step)
//   K Ti Td lambda delta           any of these enables the closed loop
//   out             output CSV path (default fode_run.csv)

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fode/control.hpp"
#include "fode/signal.hpp"
#include "fode/statespace.hpp"

namespace fode {

inline constexpr std::size_t kDefaultSteps = 300;

enum class InputKind { Step, Zero, File };

struct InputSpec {
  InputKind kind = InputKind::Step;
  std::filesystem::path path;  // InputKind::File only
};

struct RunConfig {
  FodeModel plant;
  Scheme scheme = PseScheme{};
  double step = 0.0;
  std::size_t n_steps = kDefaultSteps;
  InputSpec input;
  std::optional<ControllerSpec> controller;
  std::filesystem::path out = "fode_run.csv";
};

/// Throws ConfigError naming the offending key (and line when there is one).
RunConfig parse_config(std::string_view text);

/// Reads and parses a config file. Relative `file:` input paths resolve
/// against the config file's directory. Throws IoError or ConfigError.
RunConfig load_config(const std::filesystem::path& path);

/// The configured input (or closed-loop setpoint), n_steps samples long.
/// File inputs hold one sample per line; `#` comments and blank lines are
/// skipped. Throws IoError or ConfigError.
SampledSignal make_input(const RunConfig& config);

std::string scheme_name(const Scheme& scheme);

}  // namespace fode
