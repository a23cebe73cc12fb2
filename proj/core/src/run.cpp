#include "fode/run.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "fode/csv.hpp"
#include "fode/errors.hpp"

namespace fode {
namespace {

std::optional<std::size_t> read_memory(const std::filesystem::path& csv) {
  std::ifstream is(metadata_path(csv));
  if (!is) return std::nullopt;
  try {
    const auto meta = nlohmann::json::parse(is);
    return meta.at("memory_bytes_peak").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad metadata for '" + csv.string() + "': " + e.what());
  }
}

nlohmann::json metadata(const RunConfig& cfg, const SimulationResult& r, double wall_seconds) {
  nlohmann::json meta;
  meta["scheme"] = scheme_name(cfg.scheme);
  if (const auto* pse = std::get_if<PseScheme>(&cfg.scheme)) {
    meta["memory_samples"] = pse->memory_samples;
  }
  meta["plant"] = {{"a2", cfg.plant.a2},
                   {"a1", cfg.plant.a1},
                   {"a0", cfg.plant.a0},
                   {"alpha", cfg.plant.alpha},
                   {"beta", cfg.plant.beta}};
  meta["T"] = cfg.step;
  meta["n_steps"] = cfg.n_steps;
  switch (cfg.input.kind) {
    case InputKind::Step: meta["input"] = "step"; break;
    case InputKind::Zero: meta["input"] = "zero"; break;
    case InputKind::File: meta["input"] = "file:" + cfg.input.path.string(); break;
  }
  if (cfg.controller) {
    const auto& c = *cfg.controller;
    meta["controller"] = {
        {"K", c.K}, {"Ti", c.Ti}, {"Td", c.Td}, {"lambda", c.lambda}, {"delta", c.delta}};
  }
  meta["memory_bytes_peak"] = r.memory_bytes_peak;
  meta["wall_seconds"] = wall_seconds;
  return meta;
}

}  // namespace

std::filesystem::path metadata_path(const std::filesystem::path& csv) {
  auto p = csv;
  p += ".meta.json";
  return p;
}

SimulationResult simulate(const RunConfig& cfg) {
  const SampledSignal input = make_input(cfg);
  if (cfg.controller) {
    return simulate_closed_loop(cfg.plant, *cfg.controller, input, cfg.scheme, cfg.n_steps);
  }
  const StateSpaceModel ss = decompose(cfg.plant);
  if (const auto* pse = std::get_if<PseScheme>(&cfg.scheme)) {
    return simulate_pse(ss, input, pse->memory_samples, cfg.n_steps);
  }
  return simulate_cfe(ss, input, cfg.n_steps);
}

RunOutcome run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  out.result = simulate(cfg);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  out.csv = cfg.out;
  out.metadata = metadata_path(cfg.out);
  write_csv(out.csv, out.result);

  std::ofstream os(out.metadata);
  if (!os) throw IoError("cannot open '" + out.metadata.string() + "' for writing");
  os << metadata(cfg, out.result, out.wall_seconds).dump(2) << '\n';
  if (!os) throw IoError("write to '" + out.metadata.string() + "' failed");
  return out;
}

std::optional<double> CompareReport::memory_ratio() const {
  if (!memory_a || !memory_b || *memory_b == 0) return std::nullopt;
  return static_cast<double>(*memory_a) / static_cast<double>(*memory_b);
}

CompareReport compare_runs(const std::filesystem::path& a, const std::filesystem::path& b) {
  const SimulationResult ra = read_csv(a);
  const SimulationResult rb = read_csv(b);
  CompareReport rep;
  rep.rows = std::min(ra.size(), rb.size());
  for (std::size_t k = 0; k < rep.rows; ++k) {
    const double d = std::abs(ra.y[k] - rb.y[k]);
    if (d > rep.max_abs_dy) {
      rep.max_abs_dy = d;
      rep.t_at_max = ra.t[k];
    }
  }
  rep.memory_a = read_memory(a);
  rep.memory_b = read_memory(b);
  return rep;
}

}  // namespace fode

namespace fode {

std::string controllability_text(const StateSpaceModel& ss, const ControllabilityReport& rep) {
  const auto f = [](double v) { return format_double(v == 0.0 ? 0.0 : v); };
  const auto mat = [&](const Eigen::Matrix2d& m) {
    return "[[" + f(m(0, 0)) + ", " + f(m(0, 1)) + "], [" + f(m(1, 0)) + ", " + f(m(1, 1)) + "]]";
  };
  std::string out;
  out += "orders = [" + f(ss.orders[0]) + ", " + f(ss.orders[1]) + "]\n";
  out += "A = " + mat(ss.A) + "\n";
  out += "B = [" + f(ss.B[0]) + ", " + f(ss.B[1]) + "]\n";
  out += "C = [" + f(ss.C[0]) + ", " + f(ss.C[1]) + "]\n";
  out += "Q_R = " + mat(rep.qr) + "\n";
  out += "rank = " + std::to_string(rep.rank) + "\n";
  out += "tolerance = " + f(rep.tolerance) + "\n";
  return out;
}

}  // namespace fode
