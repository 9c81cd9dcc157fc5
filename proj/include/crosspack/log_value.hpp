#pragma once

#include <compare>
#include <limits>
#include <span>

namespace crosspack {

/// A nonnegative real stored as its natural logarithm; -inf is exactly zero.
///
/// Densities, volumes and moments in this library reach 1e-600 and 1e+2500
/// for the dimensions of interest, so every product is carried in log form
/// and sums go through log-sum-exp.
class LogNonNeg {
 public:
  constexpr LogNonNeg() = default;

  static LogNonNeg from_real(double x);
  static LogNonNeg from_log(double log_value);

  static constexpr LogNonNeg zero() { return LogNonNeg(); }
  static constexpr LogNonNeg one() {
    LogNonNeg v;
    v.log_ = 0.0;
    return v;
  }

  constexpr double log() const { return log_; }
  double to_real() const;
  constexpr bool is_zero() const {
    return log_ == -std::numeric_limits<double>::infinity();
  }

  LogNonNeg pow(double exponent) const;

  friend LogNonNeg operator+(LogNonNeg a, LogNonNeg b);
  friend LogNonNeg operator*(LogNonNeg a, LogNonNeg b);
  friend LogNonNeg operator/(LogNonNeg a, LogNonNeg b);

  LogNonNeg& operator+=(LogNonNeg o) { return *this = *this + o; }
  LogNonNeg& operator*=(LogNonNeg o) { return *this = *this * o; }

  friend constexpr bool operator==(LogNonNeg a, LogNonNeg b) {
    return a.log_ == b.log_;
  }
  friend constexpr auto operator<=>(LogNonNeg a, LogNonNeg b) {
    return a.log_ <=> b.log_;
  }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
};

/// Sum of many values with a single max shift.
LogNonNeg log_sum(std::span<const LogNonNeg> values);

/// Sum of raw log values (each may be -inf).
double log_sum_exp(std::span<const double> logs);

/// positive - negative, where both sides are large magnitudes that may cancel.
struct SignedDifference {
  int sign = 0;               // -1, 0, +1 of the exact difference as computed
  double log_magnitude = 0;   // ln |positive - negative| (-inf when equal)
  double relative = 0;        // (positive - negative) / max(positive, negative)
};

SignedDifference difference(LogNonNeg positive, LogNonNeg negative);

}  // namespace crosspack
