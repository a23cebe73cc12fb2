#pragma once

// Two-term fractional plant
//
//   a2 y^(alpha) + a1 y^(beta) + a0 y = u
//
// decomposed under zero initial conditions into
//
//   x1^(beta)        = x2
//   x2^(alpha-beta)  = -(a0/a2) x1 - (a1/a2) x2 + (1/a2) u,    y = x1
//
// and simulated with either the Grünwald-Letnikov power series (PSE) or
// the degree-9 CFE Tustin operator.

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "fode/cfe.hpp"
#include "fode/history.hpp"
#include "fode/signal.hpp"

namespace fode {

inline constexpr std::size_t kDefaultMemorySamples = 100;

struct FodeModel {
  double a2 = 1.0;
  double a1 = 0.0;
  double a0 = 0.0;
  double alpha = 2.0;
  double beta = 1.0;

  /// Throws InvalidModel unless a2 != 0, alpha > beta > 0 and everything is finite.
  void validate() const;
};

struct StateSpaceModel {
  std::array<double, 2> orders{};  // (beta, alpha - beta)
  Eigen::Matrix2d A = Eigen::Matrix2d::Zero();
  Eigen::Vector2d B = Eigen::Vector2d::Zero();
  Eigen::RowVector2d C{1.0, 0.0};
};

StateSpaceModel decompose(const FodeModel& model);

struct SimulationResult {
  double step = 0.0;
  std::vector<double> t;
  std::vector<double> u;
  std::vector<double> y;
  std::vector<double> x1;
  std::vector<double> x2;
  /// Bytes held in state (and, for closed loops, controller) history buffers.
  /// Input samples are read from the trajectory's own u column.
  std::size_t memory_bytes_peak = 0;

  std::size_t size() const noexcept { return t.size(); }
};

/// Explicit power-series recursion
///
///   x1_{k+1} = -sum_{j=1}^{min(k+1,L)} b_j x1_{k+1-j} + T^beta (A_0 x_k + B_0 u_k)
///   x2_{k+1} = -sum_{j=1}^{min(k+1,L)} c_j x2_{k+1-j} + T^(alpha-beta) (A_1 x_k + B_1 u_k)
///
/// with b, c the GL weights of the two state orders.
class PseStepper {
 public:
  /// `horizon` caps the history buffers when the run is known to be shorter than L.
  PseStepper(const StateSpaceModel& ss, double step, std::size_t memory_len_samples,
             std::size_t horizon = std::numeric_limits<std::size_t>::max(),
             const std::array<double, 2>& initial_state = {0.0, 0.0});

  Eigen::Vector2d state() const { return {x1_[0], x2_[0]}; }
  std::size_t index() const noexcept { return k_; }

  /// `inputs` holds u_0..u_k; advances the state from x_k to x_{k+1}.
  void advance(std::span<const double> inputs);

  std::size_t history_bytes() const noexcept { return x1_.bytes() + x2_.bytes(); }

 private:
  StateSpaceModel ss_;
  std::vector<double> b_;  // b_1..b_L of order beta
  std::vector<double> c_;  // c_1..c_L of order alpha - beta
  double scale1_;
  double scale2_;
  HistoryRing x1_;
  HistoryRing x2_;
  std::size_t k_ = 0;
};

/// CFE Tustin recursion. Both state equations hold as discrete operator
/// identities at every step,
///
///   (2/T)^beta P^beta x1 = Q^beta (A_0 x + B_0 u_{.-1})
///   (2/T)^delta P^delta x2 = Q^delta (A_1 x + B_1 u_{.-1}),
///
/// so the newest states solve a 2x2 linear system per step. The input enters
/// with a one-sample lag, so x_{k+1} depends on u_0..u_k only.
class CfeStepper {
 public:
  CfeStepper(const StateSpaceModel& ss, double step,
             const std::array<double, 2>& initial_state = {0.0, 0.0});

  Eigen::Vector2d state() const { return {x1_[0], x2_[0]}; }
  std::size_t index() const noexcept { return k_; }

  void advance(std::span<const double> inputs);

  std::size_t history_bytes() const noexcept { return x1_.bytes() + x2_.bytes(); }

 private:
  StateSpaceModel ss_;
  CfeOperator op1_;
  CfeOperator op2_;
  Eigen::Matrix2d lhs_inverse_;
  HistoryRing x1_{kCfeTaps};
  HistoryRing x2_{kCfeTaps};
  std::size_t k_ = 0;
};

/// Runs n_steps samples (t_0 = 0 .. t_{n-1}). Throws InstabilityError on the
/// first non-finite state.
SimulationResult simulate_pse(const StateSpaceModel& ss, const SampledSignal& input,
                              std::size_t memory_len_samples, std::size_t n_steps);

SimulationResult simulate_cfe(const StateSpaceModel& ss, const SampledSignal& input,
                              std::size_t n_steps);

struct ControllabilityReport {
  Eigen::Matrix2d qr = Eigen::Matrix2d::Zero();  // [B, A B]
  int rank = 0;
  double tolerance = 0.0;
};

/// Rank by singular values. Without an explicit tolerance, 1e-9 times the
/// largest singular value is used.
ControllabilityReport controllability(const StateSpaceModel& ss,
                                      std::optional<double> rank_tolerance = std::nullopt);

}  // namespace fode
