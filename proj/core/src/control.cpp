#include "fode/control.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "fode/errors.hpp"

namespace fode {

void ControllerSpec::validate() const {
  for (double v : {K, Ti, Td, lambda, delta}) {
    if (!std::isfinite(v)) throw InvalidArgument("controller: all parameters must be finite");
  }
  if (lambda < 0.0) throw InvalidArgument("controller: lambda must be non-negative");
  if (delta < 0.0) throw InvalidArgument("controller: delta must be non-negative");
  if (lambda == 0.0 && Ti != 0.0) {
    throw InvalidArgument("controller: lambda = 0 with Ti != 0 duplicates the proportional term");
  }
}

PidController::PidController(const ControllerSpec& spec, const Scheme& scheme, double step)
    : spec_(spec) {
  spec_.validate();
  integral_ = make(spec_.Ti, -spec_.lambda, scheme, step);
  derivative_ = make(spec_.Td, spec_.delta, scheme, step);
}

PidController::Differintegrator PidController::make(double gain, double order,
                                                    const Scheme& scheme, double step) {
  if (gain == 0.0) return std::monostate{};
  if (const auto* pse = std::get_if<PseScheme>(&scheme)) {
    return PseFilter(order, step, pse->memory_samples);
  }
  return CfeFilter(CfeOperator(order, step));
}

double PidController::apply(Differintegrator& op, double e) {
  return std::visit(
      [e](auto& f) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, std::monostate>) {
          return 0.0;
        } else {
          return f(e);
        }
      },
      op);
}

std::size_t PidController::bytes(const Differintegrator& op) noexcept {
  return std::visit(
      [](const auto& f) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, std::monostate>) {
          return 0;
        } else {
          return f.history_bytes();
        }
      },
      op);
}

double PidController::operator()(double error) {
  const double i_term = apply(integral_, error);
  const double d_term = apply(derivative_, error);
  return spec_.K * error + spec_.Ti * i_term + spec_.Td * d_term;
}

std::size_t PidController::history_bytes() const noexcept {
  return bytes(integral_) + bytes(derivative_);
}

SampledSignal controller_output(const ControllerSpec& ctrl, const SampledSignal& error,
                                const Scheme& scheme) {
  PidController pid(ctrl, scheme, error.step());
  std::vector<double> u;
  u.reserve(error.size());
  for (double e : error.samples()) u.push_back(pid(e));
  return SampledSignal(error.step(), std::move(u));
}

namespace {

template <typename Stepper>
SimulationResult close_loop(Stepper& plant, const StateSpaceModel& ss, PidController& pid,
                            const SampledSignal& setpoint, std::size_t n_steps) {
  SimulationResult res;
  res.step = setpoint.step();
  res.t.resize(n_steps);
  res.u.resize(n_steps);
  res.y.resize(n_steps);
  res.x1.resize(n_steps);
  res.x2.resize(n_steps);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const Eigen::Vector2d x = plant.state();
    const double y = ss.C * x;
    const double u = pid(setpoint[k] - y);
    if (!std::isfinite(u)) throw InstabilityError(k, "controller output is not finite");
    res.t[k] = setpoint.time(k);
    res.x1[k] = x[0];
    res.x2[k] = x[1];
    res.y[k] = y;
    res.u[k] = u;
    if (k + 1 < n_steps) plant.advance(std::span<const double>(res.u).first(k + 1));
  }
  res.memory_bytes_peak = plant.history_bytes() + pid.history_bytes();
  return res;
}

}  // namespace

SimulationResult simulate_closed_loop(const FodeModel& plant, const ControllerSpec& ctrl,
                                      const SampledSignal& setpoint, const Scheme& scheme,
                                      std::size_t n_steps) {
  if (n_steps == 0) throw InvalidArgument("simulate_closed_loop: n_steps must be at least 1");
  if (setpoint.size() < n_steps) {
    throw InvalidArgument("simulate_closed_loop: setpoint has " +
                          std::to_string(setpoint.size()) + " samples, need " +
                          std::to_string(n_steps));
  }
  const StateSpaceModel ss = decompose(plant);
  PidController pid(ctrl, scheme, setpoint.step());

  if (const auto* pse = std::get_if<PseScheme>(&scheme)) {
    PseStepper stepper(ss, setpoint.step(), pse->memory_samples, n_steps);
    return close_loop(stepper, ss, pid, setpoint, n_steps);
  }
  CfeStepper stepper(ss, setpoint.step());
  return close_loop(stepper, ss, pid, setpoint, n_steps);
}

}  // namespace fode
