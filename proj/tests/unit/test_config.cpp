#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "fode/config.hpp"
#include "fode/errors.hpp"

namespace {

const std::string kMinimal =
    "a2=0.8\n"
    "a1=0.5\n"
    "a0=1.0\n"
    "alpha=2.2\n"
    "beta=0.9\n"
    "T=0.1\n";

std::string error_key(const std::string& text) {
  try {
    (void)fode::parse_config(text);
  } catch (const fode::ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("minimal config takes the defaults") {
  const auto cfg = fode::parse_config(kMinimal);
  CHECK(cfg.plant.a2 == 0.8);
  CHECK(cfg.plant.a1 == 0.5);
  CHECK(cfg.plant.a0 == 1.0);
  CHECK(cfg.plant.alpha == 2.2);
  CHECK(cfg.plant.beta == 0.9);
  CHECK(cfg.step == 0.1);
  REQUIRE(std::holds_alternative<fode::PseScheme>(cfg.scheme));
  CHECK(std::get<fode::PseScheme>(cfg.scheme).memory_samples == 100);
  CHECK(cfg.input.kind == fode::InputKind::Step);
  CHECK(cfg.n_steps == 300);
  CHECK_FALSE(cfg.controller.has_value());
}

TEST_CASE("comments, whitespace and every key") {
  const auto cfg = fode::parse_config(
      "# plant\n"
      "  a2 = 1   # trailing comment\n"
      "a1=2\n\n"
      "a0 = 1\r\n"
      "alpha = 2\n"
      "beta = 1\n"
      "T = 0.01\n"
      "scheme = cfe\n"
      "n_steps = 42\n"
      "input = file:data/u.txt\n"
      "K = 1.5\n"
      "Ti = 0.2\n"
      "Td = 0.1\n"
      "lambda = 0.8\n"
      "delta = 0.6\n"
      "out = run.csv\n");
  CHECK(std::holds_alternative<fode::CfeScheme>(cfg.scheme));
  CHECK(cfg.n_steps == 42);
  CHECK(cfg.input.kind == fode::InputKind::File);
  CHECK(cfg.input.path == std::filesystem::path("data/u.txt"));
  REQUIRE(cfg.controller.has_value());
  CHECK(cfg.controller->K == 1.5);
  CHECK(cfg.controller->lambda == 0.8);
  CHECK(cfg.controller->delta == 0.6);
  CHECK(cfg.out == std::filesystem::path("run.csv"));
}

TEST_CASE("config errors name the offending key") {
  CHECK(error_key(kMinimal + "alpha=0.5\n") == "alpha");  // duplicate
  CHECK(error_key("a2=0.8\na1=0.5\na0=1\nalpha=0.5\nbeta=0.9\nT=0.1\n") == "alpha");
  CHECK(error_key(kMinimal + "scheme=cfe\nmemory_samples=50\n") == "memory_samples");
  CHECK(error_key(kMinimal + "colour=blue\n") == "colour");
  CHECK(error_key("a2=0.8\na1=0.5\na0=1\nalpha=2\nbeta=0.9\n") == "T");
  CHECK(error_key("a2=0\na1=0.5\na0=1\nalpha=2\nbeta=0.9\nT=0.1\n") == "a2");
  CHECK(error_key("a2=1\na1=0.5\na0=1\nalpha=2\nbeta=0\nT=0.1\n") == "beta");
  CHECK(error_key("a2=1\na1=0.5\na0=1\nalpha=2\nbeta=0.5\nT=-1\n") == "T");
  CHECK(error_key(kMinimal + "scheme=euler\n") == "scheme");
  CHECK(error_key(kMinimal + "memory_samples=0\n") == "memory_samples");
  CHECK(error_key(kMinimal + "n_steps=3.5\n") == "n_steps");
  CHECK(error_key(kMinimal + "input=ramp\n") == "input");
  CHECK(error_key(kMinimal + "Ti=1\nlambda=0\n") == "lambda");
  CHECK(error_key(kMinimal + "delta=-0.5\n") == "delta");
  CHECK(error_key("a2=abc\na1=0.5\na0=1\nalpha=2\nbeta=0.9\nT=0.1\n") == "a2");
  CHECK(error_key(kMinimal + "K=\n") == "K");
  CHECK(error_key(kMinimal + "n_steps=inf\n") == "n_steps");
}

TEST_CASE("config errors carry line numbers") {
  try {
    (void)fode::parse_config(kMinimal + "\n# note\nscheme=cfe\nmemory_samples=50\n");
    FAIL("expected ConfigError");
  } catch (const fode::ConfigError& e) {
    CHECK(e.line() == 10);
    CHECK(std::string(e.what()).find("memory_samples") != std::string::npos);
  }
}

TEST_CASE("make_input") {
  const auto dir = std::filesystem::temp_directory_path() / "fode_config_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream os(dir / "u.txt");
    os << "# samples\n0\n0.5\n\n1.0\n1.5 # last\n";
  }
  {
    std::ofstream os(dir / "run.cfg");
    os << kMinimal << "n_steps = 4\ninput = file:u.txt\n";
  }
  const auto cfg = fode::load_config(dir / "run.cfg");
  const auto u = fode::make_input(cfg);
  REQUIRE(u.size() == 4);
  CHECK(u[1] == 0.5);
  CHECK(u[3] == 1.5);

  auto longer = cfg;
  longer.n_steps = 5;
  CHECK_THROWS_AS(fode::make_input(longer), fode::ConfigError);

  auto missing = cfg;
  missing.input.path = dir / "nope.txt";
  CHECK_THROWS_AS(fode::make_input(missing), fode::IoError);

  auto zero = cfg;
  zero.input.kind = fode::InputKind::Zero;
  const auto z = fode::make_input(zero);
  CHECK(z.size() == 4);
  CHECK(z[2] == 0.0);

  CHECK_THROWS_AS(fode::load_config(dir / "absent.cfg"), fode::IoError);
  std::filesystem::remove_all(dir);
}
