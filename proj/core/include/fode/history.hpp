#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace fode {

/// Fixed-capacity sample history, newest first. Slots that were never
/// written read as zero, which is exactly the zero-initial-history premise
/// every simulator here works under.
class HistoryRing {
 public:
  explicit HistoryRing(std::size_t capacity) : buf_(capacity, 0.0) {}

  std::size_t capacity() const noexcept { return buf_.size(); }
  std::size_t bytes() const noexcept { return buf_.size() * sizeof(double); }

  void push(double v) noexcept {
    head_ = head_ + 1 == buf_.size() ? 0 : head_ + 1;
    buf_[head_] = v;
  }

  /// Sample `lag` steps back from the newest (lag 0). Requires lag < capacity().
  double operator[](std::size_t lag) const noexcept {
    return buf_[head_ >= lag ? head_ - lag : head_ + buf_.size() - lag];
  }

  /// sum_i weights[i] * (*this)[first_lag + i], accumulated with i ascending.
  /// Requires first_lag + weights.size() <= capacity().
  double dot(std::span<const double> weights, std::size_t first_lag = 0) const noexcept {
    const std::size_t n = buf_.size();
    std::size_t pos = head_ >= first_lag ? head_ - first_lag : head_ + n - first_lag;
    double acc = 0.0;
    std::size_t i = 0;
    // newest-to-oldest walks the buffer backwards; split at the wrap point
    const std::size_t before_wrap = std::min(weights.size(), pos + 1);
    for (; i < before_wrap; ++i) acc += weights[i] * buf_[pos - i];
    pos = n - 1;
    for (std::size_t j = 0; i < weights.size(); ++i, ++j) acc += weights[i] * buf_[pos - j];
    return acc;
  }

 private:
  std::vector<double> buf_;
  std::size_t head_ = 0;
};

}  // namespace fode
