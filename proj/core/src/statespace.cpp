#include "fode/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "fode/errors.hpp"
#include "fode/gl.hpp"

namespace fode {
namespace {

void require_zero_history(const std::array<double, 2>& initial_state) {
  if (initial_state[0] != 0.0 || initial_state[1] != 0.0) {
    throw InvalidModel(
        "nonzero initial state: the state-space decomposition holds only under zero "
        "initial conditions (zero history before t = 0)");
  }
}

void require_step(double step) {
  if (!std::isfinite(step) || step <= 0.0) {
    throw InvalidArgument("simulation step must be finite and positive");
  }
}

void check_finite(const Eigen::Vector2d& x, std::size_t index) {
  if (!std::isfinite(x[0]) || !std::isfinite(x[1])) {
    throw InstabilityError(index, "state is not finite");
  }
}

void check_input(const SampledSignal& input, std::size_t n_steps, const char* who) {
  if (n_steps == 0) throw InvalidArgument(std::string(who) + ": n_steps must be at least 1");
  if (input.size() < n_steps) {
    throw InvalidArgument(std::string(who) + ": input has " + std::to_string(input.size()) +
                          " samples, need " + std::to_string(n_steps));
  }
}

// sum_{i=first}^{9} w_i * u_{k-i}, zero before u_0.
double input_dot(const CfeCoefficients& w, std::span<const double> inputs, std::size_t first) {
  const std::size_t k = inputs.size() - 1;
  double acc = 0.0;
  for (std::size_t i = first; i < kCfeTaps && i <= k; ++i) acc += w[i] * inputs[k - i];
  return acc;
}

template <typename Stepper>
SimulationResult run(Stepper& stepper, const StateSpaceModel& ss, const SampledSignal& input,
                     std::size_t n_steps) {
  SimulationResult res;
  res.step = input.step();
  res.t.resize(n_steps);
  res.u.assign(input.samples().begin(), input.samples().begin() + n_steps);
  res.y.resize(n_steps);
  res.x1.resize(n_steps);
  res.x2.resize(n_steps);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const Eigen::Vector2d x = stepper.state();
    res.t[k] = input.time(k);
    res.x1[k] = x[0];
    res.x2[k] = x[1];
    res.y[k] = ss.C * x;
    if (k + 1 < n_steps) stepper.advance(std::span<const double>(res.u).first(k + 1));
  }
  res.memory_bytes_peak = stepper.history_bytes();
  return res;
}

}  // namespace

void FodeModel::validate() const {
  for (double v : {a2, a1, a0, alpha, beta}) {
    if (!std::isfinite(v)) throw InvalidModel("plant coefficients and orders must be finite");
  }
  if (a2 == 0.0) throw InvalidModel("a2 must be nonzero");
  if (!(beta > 0.0)) throw InvalidModel("beta must be positive");
  if (!(alpha > beta)) throw InvalidModel("alpha must exceed beta");
}

StateSpaceModel decompose(const FodeModel& model) {
  model.validate();
  StateSpaceModel ss;
  ss.orders = {model.beta, model.alpha - model.beta};
  ss.A << 0.0, 1.0, -model.a0 / model.a2, -model.a1 / model.a2;
  ss.B << 0.0, 1.0 / model.a2;
  ss.C << 1.0, 0.0;
  return ss;
}

// ---------------------------------------------------------------------------

PseStepper::PseStepper(const StateSpaceModel& ss, double step, std::size_t memory_len_samples,
                       std::size_t horizon, const std::array<double, 2>& initial_state)
    : ss_(ss),
      scale1_(0.0),
      scale2_(0.0),
      x1_(std::max<std::size_t>(1, std::min(memory_len_samples, horizon))),
      x2_(x1_.capacity()) {
  require_zero_history(initial_state);
  require_step(step);
  if (memory_len_samples == 0) throw InvalidArgument("memory length must be at least 1 sample");

  const std::size_t L = x1_.capacity();
  const auto b = gl_coefficients(ss.orders[0], L).coeffs;
  const auto c = gl_coefficients(ss.orders[1], L).coeffs;
  b_.assign(b.begin() + 1, b.end());
  c_.assign(c.begin() + 1, c.end());
  scale1_ = std::pow(step, ss.orders[0]);
  scale2_ = std::pow(step, ss.orders[1]);
}

void PseStepper::advance(std::span<const double> inputs) {
  const double u = inputs.back();
  const Eigen::Vector2d x = state();
  const double rhs1 = ss_.A.row(0).dot(x) + ss_.B[0] * u;
  const double rhs2 = ss_.A.row(1).dot(x) + ss_.B[1] * u;

  // lag 0 in the history is x_k, i.e. j = 1 in the weighted sum
  const Eigen::Vector2d next{-x1_.dot(b_) + scale1_ * rhs1, -x2_.dot(c_) + scale2_ * rhs2};
  check_finite(next, k_ + 1);
  x1_.push(next[0]);
  x2_.push(next[1]);
  ++k_;
}

// ---------------------------------------------------------------------------

CfeStepper::CfeStepper(const StateSpaceModel& ss, double step,
                       const std::array<double, 2>& initial_state)
    : ss_(ss), op1_(ss.orders[0], step), op2_(ss.orders[1], step) {
  require_zero_history(initial_state);
  const auto& p1 = op1_.numerator();
  const auto& q1 = op1_.denominator();
  const auto& p2 = op2_.numerator();
  const auto& q2 = op2_.denominator();
  if (p1[0] == 0.0 || p2[0] == 0.0) throw InvalidModel("cfe: zero leading operator tap");

  Eigen::Matrix2d lhs;
  lhs << op1_.gain() * p1[0] - q1[0] * ss.A(0, 0), -q1[0] * ss.A(0, 1),
      -q2[0] * ss.A(1, 0), op2_.gain() * p2[0] - q2[0] * ss.A(1, 1);
  Eigen::FullPivLU<Eigen::Matrix2d> lu(lhs);
  if (!lu.isInvertible()) throw InvalidModel("cfe: per-step update system is singular");
  lhs_inverse_ = lu.inverse();
}

void CfeStepper::advance(std::span<const double> inputs) {
  const auto& p1 = op1_.numerator();
  const auto& q1 = op1_.denominator();
  const auto& p2 = op2_.numerator();
  const auto& q2 = op2_.denominator();
  const auto tail = [](const CfeCoefficients& c) { return std::span<const double>(c).subspan(1); };

  // History lag 0 is x_k = x_{n-1} for the new index n = k + 1.
  const double x1_p1 = x1_.dot(tail(p1));
  const double x1_q1 = x1_.dot(tail(q1));
  const double x2_q1 = x2_.dot(tail(q1));
  const double x1_q2 = x1_.dot(tail(q2));
  const double x2_q2 = x2_.dot(tail(q2));
  const double x2_p2 = x2_.dot(tail(p2));

  // Lagged input: w_j uses u_{j-1}, so w_{n-i} uses u_{k-i}, i = 0..9.
  const double u_q1 = input_dot(q1, inputs, 0);
  const double u_q2 = input_dot(q2, inputs, 0);

  const Eigen::Vector2d rhs{
      ss_.A(0, 0) * x1_q1 + ss_.A(0, 1) * x2_q1 + ss_.B[0] * u_q1 - op1_.gain() * x1_p1,
      ss_.A(1, 0) * x1_q2 + ss_.A(1, 1) * x2_q2 + ss_.B[1] * u_q2 - op2_.gain() * x2_p2};
  const Eigen::Vector2d next = lhs_inverse_ * rhs;
  check_finite(next, k_ + 1);
  x1_.push(next[0]);
  x2_.push(next[1]);
  ++k_;
}

// ---------------------------------------------------------------------------

SimulationResult simulate_pse(const StateSpaceModel& ss, const SampledSignal& input,
                              std::size_t memory_len_samples, std::size_t n_steps) {
  check_input(input, n_steps, "simulate_pse");
  PseStepper stepper(ss, input.step(), memory_len_samples, n_steps);
  return run(stepper, ss, input, n_steps);
}

SimulationResult simulate_cfe(const StateSpaceModel& ss, const SampledSignal& input,
                              std::size_t n_steps) {
  check_input(input, n_steps, "simulate_cfe");
  CfeStepper stepper(ss, input.step());
  return run(stepper, ss, input, n_steps);
}

ControllabilityReport controllability(const StateSpaceModel& ss,
                                      std::optional<double> rank_tolerance) {
  if (rank_tolerance && !(std::isfinite(*rank_tolerance) && *rank_tolerance > 0.0)) {
    throw InvalidArgument("controllability: rank tolerance must be finite and positive");
  }
  ControllabilityReport report;
  report.qr.col(0) = ss.B;
  report.qr.col(1) = ss.A * ss.B;

  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(report.qr);
  const Eigen::Vector2d sv = svd.singularValues();
  report.tolerance = rank_tolerance.value_or(1e-9 * sv[0]);
  report.rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > report.tolerance) ++report.rank;
  }
  return report;
}

}  // namespace fode
