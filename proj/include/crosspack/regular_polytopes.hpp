#pragma once

#include <string>

namespace crosspack {

// Volume and inradius of a convex body, as consumed by the insphere bound.
struct BodyMeasure {
  std::string name;
  int dimension = 0;
  double log_volume = 0;
  double inradius = 0;
};

// Regular 120-cell with unit edge:
//   vol = (15/4)(105 + 47 sqrt5),  inradius = phi^4 / 2.
BodyMeasure regular_120_cell();

// Regular 600-cell with unit edge:
//   vol = (25/4)(2 + sqrt5),  inradius = phi^3 / (2 sqrt2).
BodyMeasure regular_600_cell();

}  // namespace crosspack
