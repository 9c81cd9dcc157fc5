#pragma once

#include <span>
#include <string>
#include <vector>

#include "crosspack/bounds.hpp"

namespace crosspack {

struct PlotPoint {
  int n = 0;
  double log_bound = 0;  // natural log of the (capped) bound
};

struct PlotSeries {
  std::string label;
  std::vector<PlotPoint> points;
};

struct PlotStyle {
  bool log_scale = false;  // log10 axis, built from log_bound
  int width = 800;
  int height = 500;
};

PlotSeries series_from_reports(std::string label, std::span<const BoundReport> reports);

/// Self-contained SVG scatter of bound against dimension: one marker shape
/// per series, a connecting polyline, labelled axes with ticks and a legend.
/// Output is a pure function of the input. Throws DomainError when there is
/// nothing to plot.
std::string render_svg(const std::vector<PlotSeries>& series, const PlotStyle& style = {});

}  // namespace crosspack
