#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosspack/bounds.hpp"

namespace crosspack {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline constexpr const char* kReportCsvHeader =
    "n,method,gauge,phi,rho_star,bound,log_bound,rigor,g_prime0,g_second0_sign,"
    "g_prime_rn_sign";

/// Decimal text of e^{log_value} with `digits` significant digits, built
/// from the log so that values far below the binary64 range still print
/// (e.g. "6.3649312345678901e-800").
std::string format_from_log(double log_value, int digits = 17);

void write_reports_csv(std::ostream& out, std::span<const BoundReport> reports);
/// Inverse of write_reports_csv; the bound column is re-derived from log_bound.
std::vector<BoundReport> read_reports_csv(std::istream& in);

std::string reports_to_json(std::span<const BoundReport> reports);

}  // namespace crosspack
