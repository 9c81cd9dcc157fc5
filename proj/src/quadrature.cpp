#include "crosspack/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "crosspack/errors.hpp"
#include "crosspack/optimize.hpp"

namespace crosspack {

namespace {

constexpr int kMaxProbes = 64;
constexpr double kFirstStep = 1.0 / 64.0;

void check_finite_or_neg_inf(double v, double x) {
  if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
    std::ostringstream msg;
    msg << "log_integral_exp: integrand not finite at x=" << x;
    throw NumericalError(msg.str());
  }
}

struct Window {
  double peak_x;
  double peak_value;
  double lower;
  double upper;
};

// Probes g on lower + h 2^k, brackets the best probe and refines it, then
// locates where g falls below peak - drop on both sides.
Window locate_window(const LogIntegrand& g, double lower, double drop) {
  std::vector<double> xs{lower};
  std::vector<double> gs{g(lower)};
  check_finite_or_neg_inf(gs[0], lower);
  std::size_t best = 0;
  bool decayed = false;
  for (int k = 0; k < kMaxProbes; ++k) {
    const double x = lower + kFirstStep * std::ldexp(1.0, k);
    const double v = g(x);
    check_finite_or_neg_inf(v, x);
    xs.push_back(x);
    gs.push_back(v);
    if (v > gs[best]) best = xs.size() - 1;
    const double peak = gs[best];
    if (std::isfinite(peak) && xs.size() - 1 > best && v < peak - drop - 1.0) {
      decayed = true;
      break;
    }
  }
  if (!std::isfinite(gs[best])) {
    throw NumericalError("log_integral_exp: failed to locate a finite peak");
  }
  if (!decayed) {
    throw NumericalError("log_integral_exp: integrand does not decay");
  }

  const double a = best == 0 ? lower : xs[best - 1];
  const double b = xs[best + 1];
  auto refined = golden_section_maximize(
      [&](double x) { return g(x); }, a, b, 1e-13 * (1.0 + std::abs(b)));
  Window w{xs[best], gs[best], lower, lower};
  if (refined.value > w.peak_value) {
    w.peak_x = refined.x;
    w.peak_value = refined.value;
  }
  const double threshold = w.peak_value - drop;

  // Left end: keep everything at or above the threshold.
  if (gs[0] >= threshold) {
    w.lower = lower;
  } else {
    double lo = lower, hi = w.peak_x;
    for (int it = 0; it < 100 && hi - lo > 1e-14 * (1.0 + std::abs(hi)); ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) < threshold ? lo : hi) = mid;
    }
    w.lower = lo;
  }

  double far = xs.back();
  for (std::size_t i = best + 1; i < xs.size(); ++i) {
    if (gs[i] < threshold) {
      far = xs[i];
      break;
    }
  }
  double lo = w.peak_x, hi = far;
  for (int it = 0; it < 100 && hi - lo > 1e-14 * (1.0 + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < threshold ? hi : lo) = mid;
  }
  w.upper = hi;
  return w;
}

// ln \int_a^b e^{g} relative to the peak, composite rule.
double composite_log_integral(const LogIntegrand& g, const Window& w,
                              int panels, const GaussLegendreRule& rule) {
  const double width = (w.upper - w.lower) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = w.lower + (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + 0.5 * width * rule.nodes[i];
      const double v = g(x);
      check_finite_or_neg_inf(v, x);
      panel += rule.weights[i] * std::exp(v - w.peak_value);
    }
    sum += 0.5 * width * panel;
  }
  if (!(sum > 0.0)) {
    throw NumericalError("log_integral_exp: integral vanished on the window");
  }
  return w.peak_value + std::log(sum);
}

}  // namespace

QuadratureSpec QuadratureSpec::doubled() const {
  QuadratureSpec s = *this;
  s.panel_count *= 2;
  return s;
}

std::string QuadratureSpec::fingerprint() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "gl%dx%d:cut%.3g:conv%.3g:dbl%d",
                nodes_per_panel, panel_count, upper_cutoff_tolerance,
                convergence_tolerance, max_doublings);
  return buf;
}

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order == 1 ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

QuadratureResult log_integral_exp_detailed(const LogIntegrand& g, double lower,
                                           const QuadratureSpec& spec) {
  if (spec.panel_count < 1 || spec.nodes_per_panel < 1) {
    throw DomainError("QuadratureSpec: panel and node counts must be >= 1");
  }
  if (!(spec.upper_cutoff_tolerance > 0.0 && spec.upper_cutoff_tolerance < 1.0)) {
    throw DomainError("QuadratureSpec: cutoff tolerance must lie in (0, 1)");
  }
  if (!std::isfinite(lower)) {
    throw DomainError("log_integral_exp: lower limit must be finite");
  }
  const Window w = locate_window(g, lower, -std::log(spec.upper_cutoff_tolerance));
  const GaussLegendreRule rule = gauss_legendre(spec.nodes_per_panel);

  QuadratureResult r;
  r.peak_location = w.peak_x;
  r.peak_log_value = w.peak_value;
  r.lower = w.lower;
  r.upper = w.upper;

  if (w.upper <= w.lower) {
    throw NumericalError("log_integral_exp: empty integration window");
  }

  int panels = spec.panel_count;
  double previous = composite_log_integral(g, w, panels, rule);
  for (int d = 0; d < spec.max_doublings; ++d) {
    panels *= 2;
    const double current = composite_log_integral(g, w, panels, rule);
    r.last_log_change = std::abs(current - previous);
    if (r.last_log_change <= spec.convergence_tolerance) {
      r.value = LogNonNeg::from_log(current);
      r.panels_used = panels;
      return r;
    }
    previous = current;
  }
  std::ostringstream msg;
  msg << "log_integral_exp: no convergence after " << spec.max_doublings
      << " panel doublings (last change " << r.last_log_change << ", window ["
      << w.lower << ", " << w.upper << "], peak at " << w.peak_x << ")";
  throw NumericalError(msg.str());
}

LogNonNeg log_integral_exp(const LogIntegrand& g, double lower,
                           const QuadratureSpec& spec) {
  return log_integral_exp_detailed(g, lower, spec).value;
}

}  // namespace crosspack
