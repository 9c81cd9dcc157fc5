#include "crosspack/regular_polytopes.hpp"

#include <cmath>
#include <numbers>

namespace crosspack {

BodyMeasure regular_120_cell() {
  const double phi = std::numbers::phi;
  const double sqrt5 = std::sqrt(5.0);
  return {"120-cell", 4, std::log(15.0 / 4.0 * (105.0 + 47.0 * sqrt5)),
          std::pow(phi, 4) / 2.0};
}

BodyMeasure regular_600_cell() {
  const double phi = std::numbers::phi;
  const double sqrt5 = std::sqrt(5.0);
  return {"600-cell", 4, std::log(25.0 / 4.0 * (2.0 + sqrt5)),
          std::pow(phi, 3) / (2.0 * std::numbers::sqrt2)};
}

}  // namespace crosspack
