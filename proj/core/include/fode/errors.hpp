#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fode {

/// Bad argument to an operator or constructor (non-finite order, zero length, T <= 0).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plant description violates a2 != 0, alpha > beta > 0 or the zero-history premise.
class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A simulated quantity became non-finite.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(std::size_t step, const std::string& what)
      : std::runtime_error("instability at step " + std::to_string(step) + ": " + what),
        step_(step) {}

  /// Index of the first sample that was not finite.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Run configuration rejected; carries the offending key and 1-based line (0 if not line-bound).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, std::size_t line, const std::string& message)
      : std::runtime_error(format(key, line, message)), key_(std::move(key)), line_(line) {}

  const std::string& key() const noexcept { return key_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& key, std::size_t line, const std::string& message) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "'" + key + "': ";
    return out + message;
  }

  std::string key_;
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fode
