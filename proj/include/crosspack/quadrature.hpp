#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crosspack/log_value.hpp"

namespace crosspack {

struct QuadratureSpec {
  int panel_count = 16;
  int nodes_per_panel = 20;
  // Integration range ends where the integrand falls this far below its
  // peak (ratio, not log).
  double upper_cutoff_tolerance = 1e-16;
  // Accepted change of the log result under one panel doubling.
  double convergence_tolerance = 1e-12;
  int max_doublings = 6;

  QuadratureSpec doubled() const;
  // Stable text key identifying every field; used by the gamma cache.
  std::string fingerprint() const;
};

struct QuadratureResult {
  LogNonNeg value;
  double peak_location = 0;
  double peak_log_value = 0;
  double lower = 0;  // truncated integration range
  double upper = 0;
  int panels_used = 0;
  double last_log_change = 0;
};

using LogIntegrand = std::function<double(double)>;

/// ln \int_lower^inf e^{g(x)} dx for a log-integrand g with Gaussian-type
/// decay. Locates the peak of g, truncates where g falls below the peak by
/// ln(upper_cutoff_tolerance), and sums composite Gauss-Legendre panels
/// relative to the peak. Panels are doubled until the result is stable.
QuadratureResult log_integral_exp_detailed(const LogIntegrand& g, double lower,
                                           const QuadratureSpec& spec = {});

LogNonNeg log_integral_exp(const LogIntegrand& g, double lower,
                           const QuadratureSpec& spec = {});

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int order);

}  // namespace crosspack
