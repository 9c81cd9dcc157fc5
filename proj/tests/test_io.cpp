#include <cmath>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "crosspack/ball_table.hpp"
#include "crosspack/bounds.hpp"
#include "crosspack/cross_polytope.hpp"
#include "crosspack/errors.hpp"
#include "crosspack/gauges.hpp"
#include "crosspack/report_io.hpp"
#include "crosspack/svg_plot.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace crosspack;
using doctest::Approx;

namespace {

std::vector<BoundReport> sample_reports() {
  std::vector<BoundReport> out;
  for (int n : {7, 40, 1000}) {
    out.push_back(blichfeldt_bound(n, intrinsic_volumes(n), moments_fstar(n)));
  }
  out.push_back(blichfeldt_bound(100, intrinsic_volumes(100),
                                 moments_kl_asymptotic(100, 61.0 * std::numbers::pi / 180)));
  const auto leech = leech_lattice_density();
  out.push_back(insphere_bound(log_volume_xn(24), inradius_xn(24), 24,
                               LogNonNeg::from_real(leech.delta_upper), leech.rigor, leech.source));
  return out;
}

// Recovers the value of a mantissa/exponent string in log space.
double log_of_text(const std::string& s) {
  const auto e = s.find('e');
  const double mantissa = std::stod(s.substr(0, e));
  const long exponent = e == std::string::npos ? 0 : std::stol(s.substr(e + 1));
  return std::log(mantissa) + exponent * std::log(10.0);
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

BallTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return BallTable::parse(in);
}

}  // namespace

TEST_CASE("format_from_log") {
  CHECK(format_from_log(std::log(6.36493e-58), 6) == "6.36493e-58");
  CHECK(format_from_log(0.0, 3) == "1.00e+00");
  for (double l : {-131.8779266295669, -2000.0, -1e5, 3.5, -745.5}) {
    const std::string s = format_from_log(l);
    CHECK(log_of_text(s) == Approx(l).epsilon(1e-14));
  }
  CHECK(format_from_log(-2000.0, 6).find("e-869") != std::string::npos);
}

TEST_CASE("CSV round trip") {
  const auto reports = sample_reports();
  std::ostringstream out;
  write_reports_csv(out, reports);
  const std::string text = out.str();
  CHECK(text.rfind(std::string(kReportCsvHeader) + "\n", 0) == 0);
  CHECK(count(text, "\n") == reports.size() + 1);
  CHECK(text.find("heuristic") != std::string::npos);

  std::istringstream in(text);
  const auto back = read_reports_csv(in);
  REQUIRE(back.size() == reports.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const auto& a = reports[i];
    const auto& b = back[i];
    CHECK(a.n == b.n);
    CHECK(a.method == b.method);
    CHECK(a.rigor == b.rigor);
    CHECK(a.log_bound == b.log_bound);
    CHECK(a.rho_star == b.rho_star);
    CHECK(a.gauge.has_value() == b.gauge.has_value());
    if (a.gauge) {
      CHECK(a.gauge->kind == b.gauge->kind);
      CHECK(a.gauge->phi == b.gauge->phi);
    }
    CHECK(a.diagnostics.has_value() == b.diagnostics.has_value());
    if (a.diagnostics) {
      CHECK(a.diagnostics->g_prime_0 == b.diagnostics->g_prime_0);
      CHECK(a.diagnostics->g_second_0_sign == b.diagnostics->g_second_0_sign);
      CHECK(a.diagnostics->g_prime_rn_sign == b.diagnostics->g_prime_rn_sign);
    }
  }
  // and the re-emitted CSV is byte identical
  std::ostringstream again;
  write_reports_csv(again, back);
  CHECK(again.str() == text);
}

TEST_CASE("CSV keeps values below the double range") {
  BoundReport r;
  r.n = 5000;
  r.gauge = GaugeId{GaugeKind::FStar, std::nullopt};
  r.rho_star = 0.01;
  r.log_bound = LogNonNeg::from_log(-2500.25);
  std::ostringstream out;
  write_reports_csv(out, std::vector<BoundReport>{r});
  const std::string row = out.str().substr(out.str().find('\n') + 1);
  CHECK(row.find("e-1086") != std::string::npos);
  std::istringstream in(out.str());
  CHECK(read_reports_csv(in).at(0).log_bound.log() == -2500.25);
}

TEST_CASE("CSV reader rejects malformed rows") {
  const std::string header = std::string(kReportCsvHeader) + "\n";
  auto fails_on_line = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_reports_csv(in);
    } catch (const FormatError& e) {
      return e.line() == line;
    }
    return false;
  };
  CHECK(fails_on_line("n,bound\n", 1));
  CHECK(fails_on_line(header + "7,blichfeldt,fstar\n", 2));
  CHECK(fails_on_line(header + "x,blichfeldt,fstar,,0.1,0.5,-0.69,rigorous,0,positive,negative\n", 2));
  CHECK(fails_on_line(header + "7,blichfeldt,fstar,,0.1,0.5,-0.69,sure,0,positive,negative\n", 2));
}

TEST_CASE("JSON output") {
  const auto reports = sample_reports();
  const auto j = nlohmann::json::parse(reports_to_json(reports));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == reports.size());
  CHECK(j[0]["n"] == 7);
  CHECK(j[0]["gauge"] == "fstar");
  CHECK(j[0]["bound"].get<double>() == Approx(0.99805).epsilon(2e-4));
  CHECK(j[2]["bound_text"].get<std::string>().find("e-58") != std::string::npos);
  CHECK(j[3]["rigor"] == "heuristic");
  CHECK(j[4]["method"] == "insphere");
  CHECK(j[4]["ball_source"] == "leech-lattice");
  CHECK(reports_to_json(reports) == reports_to_json(reports));
}

TEST_CASE("ball table parsing") {
  const auto one = parse_table("24,0.001929,cohn-kumar,rigorous\n");
  REQUIRE(one.size() == 1);
  CHECK(one.records()[0].n == 24);
  CHECK(one.records()[0].source == "cohn-kumar");
  CHECK(std::fabs(leech_lattice_density().delta_upper - 0.0019295743) < 1e-10);

  CHECK(parse_table("").size() == 0);
  const auto commented = parse_table(
      "n,delta_upper,source,rigor\n# comment\n\n25,0.0017,a,rigorous\n25,0.0016,b,heuristic\n");
  CHECK(commented.size() == 2);
  CHECK(commented.best_for(25)->source == "b");
  CHECK(!commented.best_for(26).has_value());

  auto line_of = [](const std::string& text) {
    try {
      parse_table(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("24,0.0019,a,rigorous\n24,1.5,b,rigorous\n") == 2);
  CHECK(line_of("24,0,a,rigorous\n") == 1);
  CHECK(line_of("24,0.0019,a,rigorous\n24,0.0018,a,rigorous\n") == 2);
  CHECK(line_of("# c\n24,abc,a,rigorous\n") == 2);
  CHECK(line_of("24,0.001,a\n") == 1);
  CHECK(line_of("24,0.001,a,maybe\n") == 1);
  CHECK(line_of("0,0.001,a,rigorous\n") == 1);
  CHECK_THROWS_AS(BallTable::load("/nonexistent/balls.csv"), FormatError);

  BallTable t;
  t.add({30, 0.001, "x", Rigor::Rigorous});
  CHECK_THROWS_AS(t.add({30, 0.002, "x", Rigor::Rigorous}), std::invalid_argument);
}

TEST_CASE("SVG plot") {
  const PlotSeries single{"one", {{7, std::log(0.99)}}};
  const std::string svg1 = render_svg({single});
  CHECK(svg1.rfind("<svg", 0) == 0);
  CHECK(svg1.find("</svg>") != std::string::npos);
  CHECK(svg1.find("width=\"800\"") != std::string::npos);
  CHECK(svg1.find("height=\"500\"") != std::string::npos);
  // one data marker plus its legend entry
  CHECK(count(svg1, "<circle") == 2);
  CHECK(count(svg1, "<polyline") == 0);
  CHECK(svg1.find(">one<") != std::string::npos);

  CHECK_THROWS_AS(render_svg({}), DomainError);
  CHECK_THROWS_AS(render_svg({PlotSeries{"empty", {}}}), DomainError);

  const PlotSeries a{"insphere", {{24, -0.0125}, {25, -0.047}, {26, -0.1025}}};
  const PlotSeries b{"fstar", {{7, -0.002}, {20, -0.80}, {36, -2.45}}};
  const std::string two = render_svg({a, b});
  CHECK(two == render_svg({a, b}));
  CHECK(count(two, "<polyline") == 2);
  CHECK(two.find(">insphere<") != std::string::npos);
  CHECK(two.find(">fstar<") != std::string::npos);
  CHECK(count(two, "<circle") == 4);  // series a: 3 markers + legend
}

TEST_CASE("log-scale polyline on the large-n bounds descends") {
  std::vector<BoundReport> reps;
  for (int n : {40, 50, 100, 200, 500, 1000}) {
    reps.push_back(blichfeldt_bound(n, intrinsic_volumes(n), moments_fstar(n)));
  }
  const auto series = series_from_reports("fstar", reps);
  REQUIRE(series.points.size() == 6);
  const std::string svg = render_svg({series}, PlotStyle{true});
  const std::regex poly("<polyline[^>]*points=\"([^\"]*)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, poly));
  std::istringstream pts(m[1].str());
  std::string pair;
  double prev_x = -1, prev_y = -1;
  int seen = 0;
  while (pts >> pair) {
    const auto comma = pair.find(',');
    const double x = std::stod(pair.substr(0, comma));
    const double y = std::stod(pair.substr(comma + 1));
    if (seen++) {
      CHECK(x > prev_x);
      CHECK(y > prev_y);  // SVG y grows downward
    }
    prev_x = x;
    prev_y = y;
  }
  CHECK(seen == 6);
  CHECK(svg.find("1e-") != std::string::npos);
}
