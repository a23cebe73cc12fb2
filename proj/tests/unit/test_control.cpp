#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fode/control.hpp"
#include "fode/errors.hpp"
#include "oracles.hpp"

using fode::ControllerSpec;
using fode::SampledSignal;

namespace {

std::vector<double> random_signal(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

const fode::FodeModel kPaper{0.8, 0.5, 1.0, 2.2, 0.9};

}  // namespace

TEST_CASE("controller spec validation") {
  CHECK_NOTHROW(ControllerSpec{1, 0, 0, 0, 0}.validate());
  CHECK_THROWS_AS((ControllerSpec{1, 0.5, 0, 0, 1}.validate()), fode::InvalidArgument);
  CHECK_THROWS_AS((ControllerSpec{1, 0, 0, -0.5, 1}.validate()), fode::InvalidArgument);
  CHECK_THROWS_AS((ControllerSpec{1, 0, 0, 1, -0.5}.validate()), fode::InvalidArgument);
  CHECK_THROWS_AS((ControllerSpec{NAN, 0, 0, 1, 1}.validate()), fode::InvalidArgument);
}

TEST_CASE("pure proportional") {
  const auto e = random_signal(64, 2);
  for (const fode::Scheme& scheme : {fode::Scheme{fode::PseScheme{}}, fode::Scheme{fode::CfeScheme{}}}) {
    const auto u = fode::controller_output({2.0, 0, 0, 1, 1}, SampledSignal(0.1, e), scheme);
    for (std::size_t k = 0; k < e.size(); ++k) CHECK(u[k] == 2.0 * e[k]);
  }
}

TEST_CASE("integer integral of a step") {
  const double T = 0.01;
  const auto e = SampledSignal::constant(T, 101, 1.0);
  const auto u = fode::controller_output({0, 1, 0, 1, 1}, e, fode::PseScheme{e.size()});
  // the rectangle rule gives exactly (k + 1) T
  CHECK(u[100] == doctest::Approx(1.01).epsilon(1e-14));
  CHECK(std::abs(u[100] - 1.0) <= 1e-2 * (1.0 + 1e-12));
}

TEST_CASE("fractional derivative term reproduces the semi-derivative") {
  const double T = 1e-3;
  std::vector<double> ramp(1001);
  for (std::size_t k = 0; k < ramp.size(); ++k) ramp[k] = static_cast<double>(k) * T;
  const auto u = fode::controller_output({0, 0, 1, 1, 0.5}, SampledSignal(T, ramp),
                                         fode::PseScheme{ramp.size()});
  const double ref = fode::oracle::semi_derivative_of_ramp(1.0);
  CHECK(std::abs(u[1000] - ref) / ref <= 0.01);
}

TEST_CASE("lambda = delta = 1 is the classical discrete PID") {
  const double T = 0.05;
  const auto e = random_signal(300, 8);
  const ControllerSpec spec{1.7, 0.4, 0.25, 1.0, 1.0};
  const auto u = fode::controller_output(spec, SampledSignal(T, e), fode::PseScheme{e.size()});
  const auto ref = fode::oracle::integer_pid(e, T, spec.K, spec.Ti, spec.Td);
  for (std::size_t k = 0; k < e.size(); ++k) CHECK(std::abs(u[k] - ref[k]) <= 1e-9);
}

TEST_CASE("controller output is linear in the error") {
  const auto e = random_signal(200, 12);
  const ControllerSpec spec{0.8, 0.6, 0.3, 0.7, 0.4};
  for (const fode::Scheme& scheme : {fode::Scheme{fode::PseScheme{50}}, fode::Scheme{fode::CfeScheme{}}}) {
    for (double c : {-2.0, 0.25, 3.0}) {
      std::vector<double> scaled(e);
      for (double& v : scaled) v *= c;
      const auto u1 = fode::controller_output(spec, SampledSignal(0.1, e), scheme);
      const auto u2 = fode::controller_output(spec, SampledSignal(0.1, scaled), scheme);
      for (std::size_t k = 0; k < e.size(); ++k) {
        CHECK(std::abs(u2[k] - c * u1[k]) <= 1e-10 * (1 + std::abs(c * u1[k])));
      }
    }
  }
}

TEST_CASE("closed loop") {
  SUBCASE("zero gain leaves the plant at rest") {
    const auto sp = SampledSignal::constant(0.1, 200, 1.0);
    for (const fode::Scheme& scheme : {fode::Scheme{fode::PseScheme{}}, fode::Scheme{fode::CfeScheme{}}}) {
      const auto r = fode::simulate_closed_loop(kPaper, {0, 0, 0, 1, 1}, sp, scheme, 200);
      for (std::size_t k = 0; k < r.size(); ++k) {
        CHECK(r.u[k] == 0.0);
        CHECK(r.y[k] == 0.0);
      }
    }
  }
  SUBCASE("zero setpoint stays at zero") {
    const auto sp = SampledSignal::constant(0.1, 200, 0.0);
    const auto r = fode::simulate_closed_loop(kPaper, {1.2, 0.5, 0.3, 0.8, 0.6}, sp,
                                              fode::PseScheme{}, 200);
    for (std::size_t k = 0; k < r.size(); ++k) {
      CHECK(r.u[k] == 0.0);
      CHECK(r.x1[k] == 0.0);
      CHECK(r.x2[k] == 0.0);
    }
  }
  SUBCASE("proportional control of an integer plant settles at K / (a0 + K)") {
    const fode::FodeModel plant{1, 2, 1, 2, 1};
    const double T = 0.01;
    const std::size_t n = 3001;
    const auto sp = SampledSignal::constant(T, n, 1.0);
    for (const fode::Scheme& scheme : {fode::Scheme{fode::PseScheme{n}}, fode::Scheme{fode::CfeScheme{}}}) {
      const auto r = fode::simulate_closed_loop(plant, {1, 0, 0, 1, 1}, sp, scheme, n);
      CHECK(std::abs(r.y.back() - 0.5) <= 0.02 * 0.5);
    }
  }
  SUBCASE("fractional PD on the published plant stays bounded") {
    const auto sp = SampledSignal::constant(0.01, 5001, 1.0);
    for (const fode::Scheme& scheme : {fode::Scheme{fode::PseScheme{}}, fode::Scheme{fode::CfeScheme{}}}) {
      const auto r = fode::simulate_closed_loop(kPaper, {0.5, 0, 0.1, 1, 0.2}, sp, scheme, 5001);
      for (double y : r.y) CHECK(std::abs(y) < 10.0);
    }
  }
  SUBCASE("memory accounting includes controller histories") {
    const auto sp = SampledSignal::constant(0.1, 300, 1.0);
    const auto r = fode::simulate_closed_loop(kPaper, {1, 0.5, 0.2, 0.5, 0.5}, sp,
                                              fode::PseScheme{100}, 300);
    CHECK(r.memory_bytes_peak == (2 * 100 + 2 * 101) * sizeof(double));
  }
  SUBCASE("setpoint too short") {
    const auto sp = SampledSignal::constant(0.1, 10, 1.0);
    CHECK_THROWS_AS(fode::simulate_closed_loop(kPaper, {1, 0, 0, 1, 1}, sp, fode::CfeScheme{}, 11),
                    fode::InvalidArgument);
  }
}
