#pragma once

// Degree-9 continued-fraction expansion of the Tustin operator,
//
//   D^r(z) ~ (2/T)^r * P(z^-1) / Q(z^-1),
//
// with the coefficients of Q as closed-form polynomials in the order r and
// P obtained from Q by flipping the sign of the odd-index coefficients.

#include <array>
#include <cstddef>

#include "fode/history.hpp"
#include "fode/signal.hpp"

namespace fode {

inline constexpr std::size_t kCfeDegree = 9;
inline constexpr std::size_t kCfeTaps = kCfeDegree + 1;

/// Coefficients of z^0 .. z^-9.
using CfeCoefficients = std::array<double, kCfeTaps>;

/// Q_0..Q_9 evaluated at order r. Q_0 is 34459425 for every r.
CfeCoefficients q9_coefficients(double r);

/// P_i = Q_i for even i, -Q_i for odd i.
CfeCoefficients p9_coefficients(double r);

struct CfePolynomials {
  double order = 0.0;
  CfeCoefficients p{};
  CfeCoefficients q{};
};

CfePolynomials cfe_polynomials(double r);

/// Discrete IIR operator (2/T)^r P/Q. Immutable; apply() runs the recursion
///
///   y_k = ((2/T)^r sum_{i=0}^{9} P_i u_{k-i} - sum_{i=1}^{9} Q_i y_{k-i}) / Q_0
///
/// with all samples before index 0 taken as zero.
class CfeOperator {
 public:
  /// Throws InvalidArgument for non-finite r or T not finite and positive.
  CfeOperator(double r, double step);

  double order() const noexcept { return poly_.order; }
  double step() const noexcept { return step_; }
  double gain() const noexcept { return gain_; }
  const CfePolynomials& polynomials() const noexcept { return poly_; }
  const CfeCoefficients& numerator() const noexcept { return poly_.p; }
  const CfeCoefficients& denominator() const noexcept { return poly_.q; }

  /// Throws InvalidArgument if the signal step differs from the operator step.
  SampledSignal apply(const SampledSignal& input) const;

 private:
  CfePolynomials poly_;
  double step_;
  double gain_;
};

CfeOperator cfe_operator(double r, double step);

/// Streaming form of CfeOperator with ten-sample input and output histories.
class CfeFilter {
 public:
  explicit CfeFilter(const CfeOperator& op);

  double operator()(double input);

  std::size_t history_bytes() const noexcept { return in_.bytes() + out_.bytes(); }

 private:
  CfeCoefficients num_;  // gain folded in
  CfeCoefficients den_;
  HistoryRing in_{kCfeTaps};
  HistoryRing out_{kCfeTaps};
};

}  // namespace fode
