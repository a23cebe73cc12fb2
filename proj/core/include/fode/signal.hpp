#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fode {

/// Uniformly sampled signal f(0), f(T), f(2T), ...
class SampledSignal {
 public:
  /// Throws InvalidArgument if `step` is not finite and positive or `samples` is empty.
  SampledSignal(double step, std::vector<double> samples);

  /// n samples of a constant value, e.g. a unit step.
  static SampledSignal constant(double step, std::size_t n, double value);

  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }
  double operator[](std::size_t k) const { return samples_[k]; }
  double time(std::size_t k) const noexcept { return static_cast<double>(k) * step_; }

 private:
  double step_;
  std::vector<double> samples_;
};

}  // namespace fode
