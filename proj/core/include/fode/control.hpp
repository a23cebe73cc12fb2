#pragma once

// Fractional PI^lambda D^delta controller
//
//   u(t) = K e(t) + Ti D^-lambda e(t) + Td D^delta e(t)
//
// and unity negative-feedback simulation around a fractional plant.

#include <cstddef>
#include <optional>
#include <variant>

#include "fode/cfe.hpp"
#include "fode/gl.hpp"
#include "fode/signal.hpp"
#include "fode/statespace.hpp"

namespace fode {

struct PseScheme {
  std::size_t memory_samples = kDefaultMemorySamples;
};
struct CfeScheme {};

using Scheme = std::variant<PseScheme, CfeScheme>;

struct ControllerSpec {
  double K = 0.0;
  double Ti = 0.0;
  double Td = 0.0;
  double lambda = 1.0;
  double delta = 1.0;

  /// Throws InvalidArgument for non-finite fields, negative orders, or
  /// lambda == 0 with Ti != 0 (a second proportional term).
  void validate() const;
};

/// Streaming controller: one control sample per error sample, zero history.
class PidController {
 public:
  PidController(const ControllerSpec& spec, const Scheme& scheme, double step);

  double operator()(double error);

  std::size_t history_bytes() const noexcept;

 private:
  using Differintegrator = std::variant<std::monostate, PseFilter, CfeFilter>;

  static Differintegrator make(double gain, double order, const Scheme& scheme, double step);
  static double apply(Differintegrator& op, double e);
  static std::size_t bytes(const Differintegrator& op) noexcept;

  ControllerSpec spec_;
  Differintegrator integral_;
  Differintegrator derivative_;
};

SampledSignal controller_output(const ControllerSpec& ctrl, const SampledSignal& error,
                                const Scheme& scheme);

/// Per step k: y_k = C x_k, e_k = r_k - y_k, u_k = controller(e_0..e_k), then
/// the plant advances to x_{k+1} using inputs through u_k.
SimulationResult simulate_closed_loop(const FodeModel& plant, const ControllerSpec& ctrl,
                                      const SampledSignal& setpoint, const Scheme& scheme,
                                      std::size_t n_steps);

}  // namespace fode
