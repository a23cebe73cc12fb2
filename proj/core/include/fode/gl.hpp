#pragma once

// Grünwald-Letnikov differintegration: binomial weights, batch
// differintegration of sampled signals and the truncated power-series
// (FIR) form of the discrete operator.

#include <cstddef>
#include <span>
#include <vector>

#include "fode/history.hpp"
#include "fode/signal.hpp"

namespace fode {

/// Weights b_0..b_n of the generalized finite difference of order r.
/// Positive order differentiates, negative order integrates.
struct GlCoefficients {
  double order = 0.0;
  std::vector<double> coeffs;

  std::size_t truncation() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// b_0 = 1, b_j = (1 - (r + 1) / j) * b_{j-1} for j = 1..n.
/// Throws InvalidArgument for non-finite r or n == 0.
GlCoefficients gl_coefficients(double r, std::size_t n);

/// Output sample k is T^-r * sum_{j=0}^{min(k, memory_len_samples)} b_j f_{k-j}.
/// The history sum runs j ascending.
SampledSignal gl_differintegrate(const SampledSignal& signal, double r,
                                 std::size_t memory_len_samples);

/// Tap weights T^-r * b_j, j = 0..memory_len_samples, of the truncated
/// power-series operator (1 - z^-1)^r / T^r.
std::vector<double> pse_operator_coefficients(double r, double step,
                                              std::size_t memory_len_samples);

/// Streaming form of the truncated power-series operator: one output per
/// pushed input, with zero history before the first sample.
class PseFilter {
 public:
  PseFilter(double r, double step, std::size_t memory_len_samples);

  double operator()(double input);

  double order() const noexcept { return order_; }
  std::span<const double> taps() const noexcept { return taps_; }
  std::size_t history_bytes() const noexcept { return history_.bytes(); }

 private:
  double order_;
  std::vector<double> taps_;
  HistoryRing history_;
};

}  // namespace fode
