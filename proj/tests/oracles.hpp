#pragma once

// Test-only reference computations, independent of the library.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace oracle {

using big_float = boost::multiprecision::cpp_bin_float_50;
using big_int = boost::multiprecision::cpp_int;

inline big_int factorial(int n) {
  big_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline big_int binomial(int a, int b) {
  big_int c = 1;
  for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
  return c;
}

// ln of a big integer by way of 50-digit floating point.
inline double log_of(const big_int& v) {
  return static_cast<double>(log(big_float(v)));
}

template <typename F>
long double simpson_step(F& f, long double a, long double b, long double fa,
                         long double fm, long double fb, long double whole,
                         long double tol, int depth) {
  const long double m = 0.5L * (a + b);
  const long double lm = 0.5L * (a + m), rm = 0.5L * (m + b);
  const long double flm = f(lm), frm = f(rm);
  const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
  const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
  const long double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0L * tol)
    return left + right + delta / 15.0L;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

// Adaptive Simpson on [a, b] to absolute tolerance tol.
template <typename F>
long double simpson(F f, long double a, long double b, long double tol) {
  const long double fa = f(a), fb = f(b), fm = f(0.5L * (a + b));
  const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Gauss-Kronrod reference with a tight error target.
template <typename F>
double kronrod(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15,
                                                                       1e-15);
}

// The B-gauge of the cross-polytope: f0(r) = 1 - r^2/2 on [0, sqrt2], and
// f*(r) = 1 - f0(2 - r) below 1.
inline double f0(double r) { return r <= std::numbers::sqrt2 ? 1.0 - 0.5 * r * r : 0.0; }
inline double fstar(double r) { return r >= 1.0 ? f0(r) : 1.0 - f0(2.0 - r); }

// Surface area of S^{j-1}, i.e. 2 pi^{j/2} / Gamma(j/2).
inline double log_sphere_area(int j) {
  return std::log(2.0) + 0.5 * j * std::log(std::numbers::pi) - std::lgamma(0.5 * j);
}

// Radial moment \int_{R^j} f(|x|) dx for a profile supported on [0, sqrt2],
// split at the kinks of f*. Each piece is a polynomial of degree j + 1, which
// the 30-point Gauss rule integrates exactly for j <= 57.
template <typename F>
double radial_moment(F f, int j) {
  if (j == 0) return f(0.0);
  auto integrand = [&](double r) { return f(r) * std::pow(r, j - 1); };
  const double k1 = 2.0 - std::numbers::sqrt2;
  using rule = boost::math::quadrature::gauss<double, 30>;
  const double s = rule::integrate(integrand, 0.0, k1) + rule::integrate(integrand, k1, 1.0) +
                   rule::integrate(integrand, 1.0, std::numbers::sqrt2);
  return std::exp(log_sphere_area(j)) * s;
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240611) { return std::mt19937_64(seed); }

}  // namespace oracle
