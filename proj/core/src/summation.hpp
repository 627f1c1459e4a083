#pragma once

#include <cmath>

namespace eun::detail {

// Neumaier compensated sum; adding in a fixed order keeps results
// bitwise-reproducible.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0;
  double carry_ = 0;
};

inline double relative_difference(double a, double b) {
  const double scale = std::fmax(std::fabs(a), std::fabs(b));
  return scale == 0 ? 0 : std::fabs(a - b) / scale;
}

}  // namespace eun::detail

#include <cstdint>

namespace eun::detail {

// Index of the state obtained by changing one digit from `from` to `to`.
inline std::uint64_t replace_digit(std::uint64_t index, std::uint64_t stride, std::uint64_t from,
                                   std::uint64_t to) {
  return index - from * stride + to * stride;
}

}  // namespace eun::detail
