#include "fode/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "fode/csv.hpp"
#include "fode/errors.hpp"

namespace fode {
namespace {

constexpr std::array<std::string_view, 16> kKeys = {
    "a2", "a1", "a0", "alpha", "beta", "scheme", "memory_samples", "T",
    "n_steps", "input", "K", "Ti", "Td", "lambda", "delta", "out"};

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

class Entries {
 public:
  explicit Entries(std::string_view text) {
    std::size_t lineno = 0;
    while (!text.empty()) {
      const auto nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++lineno;

      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) continue;

      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(std::string(line), lineno, "expected 'key = value'");
      }
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
        throw ConfigError(key, lineno, "unknown key");
      }
      if (value.empty()) throw ConfigError(key, lineno, "missing value");
      if (entries_.count(key) != 0) {
        throw ConfigError(key, lineno,
                          "duplicate key (first set on line " +
                              std::to_string(entries_.at(key).line) + ")");
      }
      entries_.emplace(key, Entry{value, lineno});
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::size_t line(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  const std::string& text(const std::string& key) const { return entries_.at(key).value; }

  double number(const std::string& key) const {
    if (!has(key)) throw ConfigError(key, 0, "missing required key");
    double v = 0.0;
    try {
      v = parse_double(text(key));
    } catch (const InvalidArgument&) {
      throw ConfigError(key, line(key), "not a number: '" + text(key) + "'");
    }
    if (!std::isfinite(v)) throw ConfigError(key, line(key), "must be finite");
    return v;
  }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  std::size_t count(const std::string& key) const {
    const std::string& s = text(key);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ConfigError(key, line(key), "expected a non-negative integer, got '" + s + "'");
    }
    if (v == 0) throw ConfigError(key, line(key), "must be at least 1");
    return v;
  }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

InputSpec parse_input(const Entries& e) {
  if (!e.has("input")) return {};
  const std::string& v = e.text("input");
  if (v == "step") return {InputKind::Step, {}};
  if (v == "zero") return {InputKind::Zero, {}};
  constexpr std::string_view prefix = "file:";
  if (v.rfind(prefix, 0) == 0 && v.size() > prefix.size()) {
    return {InputKind::File, std::filesystem::path(v.substr(prefix.size()))};
  }
  throw ConfigError("input", e.line("input"), "expected step, zero or file:<path>, got '" + v + "'");
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  const Entries e(text);
  RunConfig cfg;

  cfg.plant.a2 = e.number("a2");
  cfg.plant.a1 = e.number("a1");
  cfg.plant.a0 = e.number("a0");
  cfg.plant.alpha = e.number("alpha");
  cfg.plant.beta = e.number("beta");
  cfg.step = e.number("T");

  if (cfg.plant.a2 == 0.0) throw ConfigError("a2", e.line("a2"), "must be nonzero");
  if (!(cfg.plant.beta > 0.0)) throw ConfigError("beta", e.line("beta"), "must be positive");
  if (!(cfg.plant.alpha > cfg.plant.beta)) {
    throw ConfigError("alpha", e.line("alpha"), "constraint alpha > beta violated");
  }
  if (!(cfg.step > 0.0)) throw ConfigError("T", e.line("T"), "step must be positive");

  const std::string scheme = e.has("scheme") ? e.text("scheme") : "pse";
  if (scheme == "pse") {
    cfg.scheme = PseScheme{e.has("memory_samples") ? e.count("memory_samples")
                                                   : kDefaultMemorySamples};
  } else if (scheme == "cfe") {
    if (e.has("memory_samples")) {
      throw ConfigError("memory_samples", e.line("memory_samples"),
                        "memory_samples applies only to scheme = pse");
    }
    cfg.scheme = CfeScheme{};
  } else {
    throw ConfigError("scheme", e.line("scheme"), "expected pse or cfe, got '" + scheme + "'");
  }

  if (e.has("n_steps")) cfg.n_steps = e.count("n_steps");
  cfg.input = parse_input(e);
  if (e.has("out")) cfg.out = e.text("out");

  if (e.has("K") || e.has("Ti") || e.has("Td") || e.has("lambda") || e.has("delta")) {
    ControllerSpec c;
    c.K = e.number_or("K", 0.0);
    c.Ti = e.number_or("Ti", 0.0);
    c.Td = e.number_or("Td", 0.0);
    c.lambda = e.number_or("lambda", 1.0);
    c.delta = e.number_or("delta", 1.0);
    if (c.lambda < 0.0) throw ConfigError("lambda", e.line("lambda"), "must be non-negative");
    if (c.delta < 0.0) throw ConfigError("delta", e.line("delta"), "must be non-negative");
    if (c.lambda == 0.0 && c.Ti != 0.0) {
      throw ConfigError("lambda", e.line("lambda"),
                        "lambda = 0 with Ti != 0 duplicates the proportional term");
    }
    cfg.controller = c;
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open config '" + path.string() + "'");
  std::ostringstream text;
  text << is.rdbuf();
  RunConfig cfg = parse_config(text.str());
  if (cfg.input.kind == InputKind::File && cfg.input.path.is_relative()) {
    cfg.input.path = path.parent_path() / cfg.input.path;
  }
  return cfg;
}

SampledSignal make_input(const RunConfig& cfg) {
  switch (cfg.input.kind) {
    case InputKind::Step:
      return SampledSignal::constant(cfg.step, cfg.n_steps, 1.0);
    case InputKind::Zero:
      return SampledSignal::constant(cfg.step, cfg.n_steps, 0.0);
    case InputKind::File:
      break;
  }

  std::ifstream is(cfg.input.path, std::ios::binary);
  if (!is) throw IoError("cannot open input '" + cfg.input.path.string() + "'");
  std::vector<double> samples;
  std::string line;
  std::size_t lineno = 0;
  while (samples.size() < cfg.n_steps && std::getline(is, line)) {
    ++lineno;
    std::string_view v(line);
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    try {
      samples.push_back(parse_double(v));
    } catch (const InvalidArgument& err) {
      throw IoError(cfg.input.path.string() + ":" + std::to_string(lineno) + ": " + err.what());
    }
  }
  if (samples.size() < cfg.n_steps) {
    throw ConfigError("input", 0,
                      "file provides " + std::to_string(samples.size()) +
                          " samples, n_steps = " + std::to_string(cfg.n_steps));
  }
  return SampledSignal(cfg.step, std::move(samples));
}

std::string scheme_name(const Scheme& scheme) {
  return std::holds_alternative<PseScheme>(scheme) ? "pse" : "cfe";
}

}  // namespace fode
