#include "fode/gl.hpp"

#include <algorithm>
#include <cmath>

#include "fode/errors.hpp"

namespace fode {

GlCoefficients gl_coefficients(double r, std::size_t n) {
  if (!std::isfinite(r)) throw InvalidArgument("gl_coefficients: order must be finite");
  if (n == 0) throw InvalidArgument("gl_coefficients: truncation must be at least 1");

  GlCoefficients out{r, std::vector<double>(n + 1)};
  out.coeffs[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    out.coeffs[j] = (1.0 - (r + 1.0) / static_cast<double>(j)) * out.coeffs[j - 1];
  }
  return out;
}

std::vector<double> pse_operator_coefficients(double r, double step,
                                              std::size_t memory_len_samples) {
  if (!std::isfinite(step) || step <= 0.0) {
    throw InvalidArgument("pse_operator_coefficients: step must be finite and positive");
  }
  auto taps = gl_coefficients(r, memory_len_samples).coeffs;
  const double scale = std::pow(step, -r);
  for (double& t : taps) t *= scale;
  return taps;
}

SampledSignal gl_differintegrate(const SampledSignal& signal, double r,
                                 std::size_t memory_len_samples) {
  if (memory_len_samples == 0) {
    throw InvalidArgument("gl_differintegrate: memory length must be at least 1 sample");
  }
  const std::size_t n = signal.size();
  // taps beyond the signal length are never used
  const std::size_t L = std::min(memory_len_samples, n);
  const auto b = gl_coefficients(r, std::max<std::size_t>(L, 1)).coeffs;
  const double scale = std::pow(signal.step(), -r);
  const auto f = signal.samples();

  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t jmax = std::min(k, L);
    double acc = 0.0;
    for (std::size_t j = 0; j <= jmax; ++j) acc += b[j] * f[k - j];
    out[k] = scale * acc;
  }
  return SampledSignal(signal.step(), std::move(out));
}

PseFilter::PseFilter(double r, double step, std::size_t memory_len_samples)
    : order_(r),
      taps_(pse_operator_coefficients(r, step, memory_len_samples)),
      history_(memory_len_samples + 1) {}

double PseFilter::operator()(double input) {
  history_.push(input);
  return history_.dot(taps_);
}

}  // namespace fode
