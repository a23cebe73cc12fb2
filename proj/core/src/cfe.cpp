#include "fode/cfe.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "fode/errors.hpp"

namespace fode {
namespace {

// Q_i(r) = r^(i mod 2) * sum_m kQ[i][m] * (r^2)^m. All coefficients are exact
// integers, so the table is exact and only the Horner evaluation rounds.
struct EvenPoly {
  std::array<std::int64_t, 5> c{};
  std::size_t n = 0;
};

constexpr std::array<EvenPoly, kCfeTaps> kQ = {{
    {{34459425}, 1},
    {{34459425}, 1},
    {{-72972900, 16216200}, 2},
    {{-61486425, 4729725}, 2},
    {{51081030, -23648625, 945945}, 3},
    {{33648615, -5405400, 135135}, 3},
    {{-13097700, 9514890, -796950, 13860}, 4},
    {{-5742495, 1451835, -76230, 990}, 4},
    {{893025, -909765, 120330, -4410, 45}, 5},
    {{147456, -52480, 4368, -120, 1}, 5},
}};

double horner(const EvenPoly& poly, double x) {
  double acc = 0.0;
  for (std::size_t m = poly.n; m-- > 0;) acc = acc * x + static_cast<double>(poly.c[m]);
  return acc;
}

void require_finite_order(double r) {
  if (!std::isfinite(r)) throw InvalidArgument("cfe: order must be finite");
}

}  // namespace

CfeCoefficients q9_coefficients(double r) {
  require_finite_order(r);
  const double r2 = r * r;
  CfeCoefficients q{};
  for (std::size_t i = 0; i < kCfeTaps; ++i) {
    const double even = horner(kQ[i], r2);
    q[i] = (i % 2 == 0) ? even : r * even;
  }
  return q;
}

CfeCoefficients p9_coefficients(double r) {
  auto p = q9_coefficients(r);
  for (std::size_t i = 1; i < kCfeTaps; i += 2) p[i] = -p[i];
  return p;
}

CfePolynomials cfe_polynomials(double r) {
  return {r, p9_coefficients(r), q9_coefficients(r)};
}

CfeOperator::CfeOperator(double r, double step) : poly_(cfe_polynomials(r)), step_(step) {
  if (!std::isfinite(step) || step <= 0.0) {
    throw InvalidArgument("cfe_operator: step must be finite and positive");
  }
  gain_ = std::pow(2.0 / step, r);
  if (!std::isfinite(gain_)) throw InvalidArgument("cfe_operator: gain (2/T)^r overflows");
}

SampledSignal CfeOperator::apply(const SampledSignal& input) const {
  if (input.step() != step_) {
    throw InvalidArgument("cfe_operator: signal step does not match operator step");
  }
  CfeFilter filter(*this);
  std::vector<double> out;
  out.reserve(input.size());
  for (double u : input.samples()) out.push_back(filter(u));
  return SampledSignal(step_, std::move(out));
}

CfeOperator cfe_operator(double r, double step) { return CfeOperator(r, step); }

CfeFilter::CfeFilter(const CfeOperator& op) : den_(op.denominator()) {
  for (std::size_t i = 0; i < kCfeTaps; ++i) num_[i] = op.gain() * op.numerator()[i];
}

double CfeFilter::operator()(double input) {
  in_.push(input);
  const double feedforward = in_.dot(num_);
  const double feedback = out_.dot(std::span<const double>(den_).subspan(1));
  const double y = (feedforward - feedback) / den_[0];
  out_.push(y);
  return y;
}

}  // namespace fode
