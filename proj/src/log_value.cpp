#include "crosspack/log_value.hpp"

#include <algorithm>
#include <cmath>

#include "crosspack/errors.hpp"

namespace crosspack {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

LogNonNeg LogNonNeg::from_real(double x) {
  if (!(x >= 0.0) || std::isinf(x)) {
    throw DomainError("LogNonNeg::from_real: value must be finite and >= 0");
  }
  return from_log(x == 0.0 ? kNegInf : std::log(x));
}

LogNonNeg LogNonNeg::from_log(double log_value) {
  if (std::isnan(log_value) || log_value == std::numeric_limits<double>::infinity()) {
    throw DomainError("LogNonNeg::from_log: log value must be < +inf");
  }
  LogNonNeg v;
  v.log_ = log_value;
  return v;
}

double LogNonNeg::to_real() const { return std::exp(log_); }

LogNonNeg LogNonNeg::pow(double exponent) const {
  if (exponent == 0.0) return one();
  return from_log(log_ * exponent);
}

LogNonNeg operator+(LogNonNeg a, LogNonNeg b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const double hi = std::max(a.log_, b.log_);
  const double lo = std::min(a.log_, b.log_);
  return LogNonNeg::from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogNonNeg operator*(LogNonNeg a, LogNonNeg b) {
  if (a.is_zero() || b.is_zero()) return LogNonNeg::zero();
  return LogNonNeg::from_log(a.log_ + b.log_);
}

LogNonNeg operator/(LogNonNeg a, LogNonNeg b) {
  if (b.is_zero()) throw DomainError("LogNonNeg: division by zero");
  if (a.is_zero()) return LogNonNeg::zero();
  return LogNonNeg::from_log(a.log_ - b.log_);
}

double log_sum_exp(std::span<const double> logs) {
  double hi = kNegInf;
  for (double l : logs) hi = std::max(hi, l);
  if (hi == kNegInf) return kNegInf;
  double s = 0.0;
  for (double l : logs) s += std::exp(l - hi);
  return hi + std::log(s);
}

LogNonNeg log_sum(std::span<const LogNonNeg> values) {
  double hi = kNegInf;
  for (auto v : values) hi = std::max(hi, v.log());
  if (hi == kNegInf) return LogNonNeg::zero();
  double s = 0.0;
  for (auto v : values) s += std::exp(v.log() - hi);
  return LogNonNeg::from_log(hi + std::log(s));
}

SignedDifference difference(LogNonNeg positive, LogNonNeg negative) {
  SignedDifference d;
  if (positive == negative) {
    d.log_magnitude = kNegInf;
    return d;
  }
  const bool pos_larger = positive > negative;
  const double hi = pos_larger ? positive.log() : negative.log();
  const double lo = pos_larger ? negative.log() : positive.log();
  // 1 - e^{lo-hi} without cancellation.
  const double frac = -std::expm1(lo - hi);
  d.sign = pos_larger ? 1 : -1;
  d.log_magnitude = hi + std::log(frac);
  d.relative = d.sign * frac;
  return d;
}

}  // namespace crosspack
