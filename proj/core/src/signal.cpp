#include "fode/signal.hpp"

#include <cmath>

#include "fode/errors.hpp"

namespace fode {

SampledSignal::SampledSignal(double step, std::vector<double> samples)
    : step_(step), samples_(std::move(samples)) {
  if (!std::isfinite(step_) || step_ <= 0.0) {
    throw InvalidArgument("sampled signal: step must be finite and positive");
  }
  if (samples_.empty()) {
    throw InvalidArgument("sampled signal: no samples");
  }
}

SampledSignal SampledSignal::constant(double step, std::size_t n, double value) {
  return SampledSignal(step, std::vector<double>(n, value));
}

}  // namespace fode
