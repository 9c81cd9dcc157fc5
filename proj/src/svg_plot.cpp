#include "crosspack/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "crosspack/errors.hpp"

namespace crosspack {

namespace {

constexpr double kLeft = 80, kRight = 30, kTop = 40, kBottom = 60;
constexpr const char* kColors[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

void marker(std::ostream& os, std::size_t style, double x, double y, const char* color) {
  const double s = 4.0;
  switch (style % 4) {
    case 0:
      os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(s)
         << "\" fill=\"" << color << "\"/>\n";
      break;
    case 1:
      os << "<polygon points=\"" << num(x - s) << ',' << num(y) << ' ' << num(x) << ','
         << num(y - s) << ' ' << num(x + s) << ',' << num(y) << ' ' << num(x) << ','
         << num(y + s) << "\" fill=\"" << color << "\"/>\n";
      break;
    case 2:
      os << "<rect x=\"" << num(x - s) << "\" y=\"" << num(y - s) << "\" width=\""
         << num(2 * s) << "\" height=\"" << num(2 * s) << "\" fill=\"" << color << "\"/>\n";
      break;
    default:
      os << "<polygon points=\"" << num(x) << ',' << num(y - s) << ' ' << num(x + s) << ','
         << num(y + s) << ' ' << num(x - s) << ',' << num(y + s) << "\" fill=\"" << color
         << "\"/>\n";
  }
}

}  // namespace

PlotSeries series_from_reports(std::string label, std::span<const BoundReport> reports) {
  PlotSeries s{std::move(label), {}};
  for (const auto& r : reports) {
    s.points.push_back({r.n, std::min(0.0, r.log_bound.log())});
  }
  return s;
}

std::string render_svg(const std::vector<PlotSeries>& series, const PlotStyle& style) {
  std::size_t total = 0;
  for (const auto& s : series) total += s.points.size();
  if (total == 0) throw DomainError("plot: no data points");

  auto y_value = [&](const PlotPoint& p) {
    return style.log_scale ? p.log_bound / std::numbers::ln10 : std::exp(p.log_bound);
  };
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      xmin = std::min(xmin, static_cast<double>(p.n));
      xmax = std::max(xmax, static_cast<double>(p.n));
      ymin = std::min(ymin, y_value(p));
      ymax = std::max(ymax, y_value(p));
    }
  }
  if (style.log_scale) {
    ymin = std::floor(ymin);
    ymax = std::ceil(ymax);
  } else {
    ymin = 0.0;
    ymax = std::max(ymax, 1e-300);
  }
  if (ymax <= ymin) ymax = ymin + 1.0;
  if (xmax <= xmin) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  const double pw = style.width - kLeft - kRight;
  const double ph = style.height - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
     << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + ph) << "\" x2=\""
     << num(kLeft + pw) << "\" y2=\"" << num(kTop + ph) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
     << "\" y2=\"" << num(kTop + ph) << "\" stroke=\"black\"/>\n";

  const double xstep = nice_step(xmax - xmin, 8);
  for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9; x += xstep) {
    os << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\""
       << num(px(x)) << "\" y2=\"" << num(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + ph + 20)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << static_cast<long>(std::lround(x))
       << "</text>\n";
  }
  const double ystep = nice_step(ymax - ymin, 8);
  for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-9 * ystep; y += ystep) {
    char label[32];
    if (style.log_scale) {
      std::snprintf(label, sizeof label, "1e%ld", std::lround(y));
    } else {
      std::snprintf(label, sizeof label, "%.3g", std::abs(y) < 1e-12 ? 0.0 : y);
    }
    os << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(y)) << "\" x2=\""
       << num(kLeft) << "\" y2=\"" << num(py(y)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(y) + 4)
       << "\" font-size=\"12\" text-anchor=\"end\">" << label << "</text>\n";
  }
  os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(style.height - 15)
     << "\" font-size=\"14\" text-anchor=\"middle\">dimension n</text>\n";
  os << "<text x=\"20\" y=\"" << num(kTop + ph / 2) << "\" font-size=\"14\" "
     << "text-anchor=\"middle\" transform=\"rotate(-90 20 " << num(kTop + ph / 2) << ")\">"
     << (style.log_scale ? "upper bound on density (log scale)" : "upper bound on density")
     << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    auto pts = series[i].points;
    std::stable_sort(pts.begin(), pts.end(),
                     [](const PlotPoint& a, const PlotPoint& b) { return a.n < b.n; });
    if (pts.size() >= 2) {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
      for (std::size_t k = 0; k < pts.size(); ++k) {
        os << (k ? " " : "") << num(px(pts[k].n)) << ',' << num(py(y_value(pts[k])));
      }
      os << "\"/>\n";
    }
    for (const auto& p : pts) marker(os, i, px(p.n), py(y_value(p)), color);
    const double ly = kTop + 10 + 18.0 * i;
    marker(os, i, kLeft + pw - 150, ly, color);
    os << "<text x=\"" << num(kLeft + pw - 140) << "\" y=\"" << num(ly + 4)
       << "\" font-size=\"12\">" << xml_escape(series[i].label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace crosspack
