#include "fode/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fode/errors.hpp"

namespace fode {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw InvalidArgument("format_double: conversion failed");
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

void write_csv(std::ostream& os, const SimulationResult& r) {
  os << "t,u,y,x1,x2\n";
  for (std::size_t k = 0; k < r.size(); ++k) {
    os << format_double(r.t[k]) << ',' << format_double(r.u[k]) << ',' << format_double(r.y[k])
       << ',' << format_double(r.x1[k]) << ',' << format_double(r.x2[k]) << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const SimulationResult& result) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(os, result);
  os.flush();
  if (!os) throw IoError("write to '" + path.string() + "' failed");
}

SimulationResult read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,u,y,x1,x2") throw IoError("csv: expected header 't,u,y,x1,x2', got '" + line + "'");

  SimulationResult r;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<double, 5> row{};
    std::size_t field = 0;
    std::string_view rest(line);
    try {
      while (true) {
        const auto comma = rest.find(',');
        if (field == row.size()) throw IoError("csv line " + std::to_string(lineno) + ": too many fields");
        row[field++] = parse_double(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    } catch (const InvalidArgument& e) {
      throw IoError("csv line " + std::to_string(lineno) + ": " + e.what());
    }
    if (field != row.size()) throw IoError("csv line " + std::to_string(lineno) + ": expected 5 fields");
    r.t.push_back(row[0]);
    r.u.push_back(row[1]);
    r.y.push_back(row[2]);
    r.x1.push_back(row[3]);
    r.x2.push_back(row[4]);
  }
  if (r.t.size() >= 2) r.step = r.t[1] - r.t[0];
  return r;
}

SimulationResult read_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path.string() + "'");
  return read_csv(is);
}

}  // namespace fode
