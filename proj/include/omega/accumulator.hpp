#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace omega {

__extension__ using int128 = __int128;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

std::string to_string(int128 v);

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit accumulator overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit product overflow");
  return r;
}

class ExactSum {
 public:
  void add(int128 t) { value_ = checked_add(value_, t); }
  void merge(const ExactSum& o) { add(o.value_); }
  int128 value() const { return value_; }

 private:
  int128 value_ = 0;
};

// Neumaier compensated summation. error_bound() covers the rounding of the
// summation itself (2u|S| + 2n u^2 sum|t|) plus one unit roundoff per term for
// the rounding incurred when the term was formed.
class CompensatedSum {
 public:
  static constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

  void add(double t) {
    add_raw(t);
    abs_sum_ += std::fabs(t);
    ++count_;
  }

  void merge(const CompensatedSum& o) {
    add_raw(o.sum_);
    add_raw(o.comp_);
    abs_sum_ += o.abs_sum_;
    count_ += o.count_;
  }

  double value() const { return sum_ + comp_; }
  double abs_sum() const { return abs_sum_; }
  std::uint64_t count() const { return count_; }

  double error_bound() const {
    const double u = kUnitRoundoff;
    return u * abs_sum_ + 2 * u * std::fabs(value()) +
           2 * static_cast<double>(count_) * u * u * abs_sum_;
  }

 private:
  void add_raw(double t) {
    const double s = sum_ + t;
    if (std::fabs(sum_) >= std::fabs(t))
      comp_ += (sum_ - s) + t;
    else
      comp_ += (t - s) + sum_;
    sum_ = s;
  }

  double sum_ = 0;
  double comp_ = 0;
  double abs_sum_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace omega
