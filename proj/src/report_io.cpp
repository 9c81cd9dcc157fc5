#include "crosspack/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "crosspack/errors.hpp"

namespace crosspack {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string bound_text(const BoundReport& r) {
  const double l = std::min(0.0, r.log_bound.log());
  if (l > -700.0) return g17(std::exp(l));
  return format_from_log(l);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream s(line);
  while (std::getline(s, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("invalid number '" + s + "'", line);
  }
}

DerivativeSign parse_sign(const std::string& s, int line) {
  if (s == "positive") return DerivativeSign::Positive;
  if (s == "negative") return DerivativeSign::Negative;
  if (s == "indeterminate") return DerivativeSign::Indeterminate;
  throw FormatError("invalid sign '" + s + "'", line);
}

}  // namespace

std::string format_from_log(double log_value, int digits) {
  if (log_value == -std::numeric_limits<double>::infinity()) return "0";
  const double l10 = log_value / std::numbers::ln10;
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mantissa);
  if (buf[0] == '1' && buf[1] == '0') {  // rounded up to 10.000...
    exponent += 1.0;
    mantissa /= 10.0;
    std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mantissa);
  }
  char out[96];
  std::snprintf(out, sizeof out, "%se%+03d", buf, static_cast<int>(exponent));
  return out;
}

void write_reports_csv(std::ostream& out, std::span<const BoundReport> reports) {
  out << kReportCsvHeader << '\n';
  for (const auto& r : reports) {
    out << r.n << ',' << method_name(r.method) << ',';
    out << (r.gauge ? gauge_kind_name(r.gauge->kind) : "") << ',';
    out << (r.gauge && r.gauge->phi ? g17(*r.gauge->phi) : "") << ',';
    out << (r.rho_star ? g17(*r.rho_star) : "") << ',';
    out << bound_text(r) << ',' << g17(r.log_bound.log()) << ',' << rigor_name(r.rigor)
        << ',';
    if (r.diagnostics) {
      out << g17(r.diagnostics->g_prime_0) << ',' << sign_name(r.diagnostics->g_second_0_sign)
          << ',' << sign_name(r.diagnostics->g_prime_rn_sign);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

std::vector<BoundReport> read_reports_csv(std::istream& in) {
  std::vector<BoundReport> reports;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) return reports;
  ++line_no;
  if (line != kReportCsvHeader) throw FormatError("unexpected report header", line_no);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 11) throw FormatError("expected 11 fields", line_no);
    BoundReport r;
    try {
      r.n = std::stoi(f[0]);
    } catch (const std::logic_error&) {
      throw FormatError("invalid dimension '" + f[0] + "'", line_no);
    }
    if (f[1] == "insphere") {
      r.method = BoundMethod::InsphereRatio;
    } else if (f[1] == "blichfeldt") {
      r.method = BoundMethod::Blichfeldt;
    } else {
      throw FormatError("invalid method '" + f[1] + "'", line_no);
    }
    if (!f[2].empty()) {
      try {
        r.gauge = GaugeId{parse_gauge_kind(f[2]), std::nullopt};
      } catch (const DomainError& e) {
        throw FormatError(e.what(), line_no);
      }
      if (!f[3].empty()) r.gauge->phi = parse_double(f[3], line_no);
    }
    if (!f[4].empty()) r.rho_star = parse_double(f[4], line_no);
    r.log_bound = LogNonNeg::from_log(parse_double(f[6], line_no));
    if (f[7] == "rigorous") {
      r.rigor = Rigor::Rigorous;
    } else if (f[7] == "heuristic") {
      r.rigor = Rigor::Heuristic;
    } else {
      throw FormatError("invalid rigor '" + f[7] + "'", line_no);
    }
    if (!f[8].empty()) {
      r.diagnostics = DiagnosticSummary{parse_double(f[8], line_no),
                                        parse_sign(f[9], line_no),
                                        parse_sign(f[10], line_no)};
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string reports_to_json(std::span<const BoundReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["method"] = method_name(r.method);
    if (r.gauge) {
      j["gauge"] = gauge_kind_name(r.gauge->kind);
      if (r.gauge->phi) j["phi"] = *r.gauge->phi;
    }
    if (r.rho_star) j["rho_star"] = *r.rho_star;
    j["bound"] = r.bound();
    j["bound_text"] = bound_text(r);
    j["log_bound"] = r.log_bound.log();
    j["rigor"] = rigor_name(r.rigor);
    if (r.diagnostics) {
      j["g_prime0"] = r.diagnostics->g_prime_0;
      j["g_second0_sign"] = sign_name(r.diagnostics->g_second_0_sign);
      j["g_prime_rn_sign"] = sign_name(r.diagnostics->g_prime_rn_sign);
    }
    if (r.dominant_term) j["dominant_term"] = *r.dominant_term;
    if (r.kl_degree) j["kl_degree"] = *r.kl_degree;
    if (!r.ball_source.empty()) j["ball_source"] = r.ball_source;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace crosspack
