// Command-line front end: bounds, ball tables, plots and the gamma cache.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crosspack/commands.hpp"
#include "crosspack/errors.hpp"

int main(int argc, char** argv) {
  using namespace crosspack;

  CLI::App app{"Upper bounds on the packing density of the regular cross-polytope"};
  app.require_subcommand(1);

  // bound
  auto* bound = app.add_subcommand("bound", "compute density upper bounds");
  std::string dims_text, method = "blichfeldt", gauge = "fstar", phi_text, window = "strict";
  std::string cache, ball_table;
  RunConfig config;
  bound->add_option("--n", dims_text, "dimensions, e.g. 7..36 or 40,100,200")->required();
  bound->add_option("--method", method, "insphere | blichfeldt")
      ->check(CLI::IsMember({"insphere", "blichfeldt"}));
  bound->add_option("--gauge", gauge, "f0 | fstar | levenshtein | kl-asymptotic")
      ->check(CLI::IsMember({"f0", "fstar", "levenshtein", "kl-asymptotic"}));
  bound->add_option("--phi-grid", phi_text, "angles in degrees: lo:hi:count or a list");
  bound->add_option("--kl-window", window, "strict (<= 63 deg) | extended")
      ->check(CLI::IsMember({"strict", "extended"}));
  bound->add_option("--k-max", config.k_max, "Jacobi degree limit (default 4n+200)");
  bound->add_option("--format", config.format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  bound->add_flag("--log-scale", config.log_scale, "log-scale y axis for svg");
  bound->add_option("--cache", cache, "gamma cache file");
  bound->add_option("--ball-table", ball_table, "ball density table (n,delta_upper,source,rigor)");
  bound->add_option("--threads", config.threads, "worker threads (default: all cores)");
  bound->add_option("--grid-points", config.blichfeldt.grid_points, "rho scan points");
  bound->add_option("--refine-tol", config.blichfeldt.refine_tol, "rho refinement width / r");
  std::optional<double> rho_fraction;
  bound->add_option("--rho-fraction", rho_fraction, "evaluate at rho = fraction * r_n");
  bound->add_option("--panels", config.quadrature.panel_count, "quadrature panels");
  bound->add_option("--nodes", config.quadrature.nodes_per_panel, "Gauss nodes per panel");
  bound->add_option("--cutoff", config.quadrature.upper_cutoff_tolerance,
                    "quadrature truncation ratio");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "validate and count a ball density table");
  std::string ingest_path;
  ingest->add_option("path", ingest_path, "table file")->required();

  // plot
  auto* plot = app.add_subcommand("plot", "SVG plot of report CSV files");
  std::vector<std::string> plot_inputs, plot_labels;
  bool plot_log = false;
  plot->add_option("inputs", plot_inputs, "report CSV files, one series each")->required();
  plot->add_option("--label", plot_labels, "series labels, in input order");
  plot->add_flag("--log-scale", plot_log, "log-scale y axis");

  // cache
  auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the gamma cache");
  std::string cache_action;
  std::string cache_file;
  cache_cmd->add_option("action", cache_action, "inspect | clear")
      ->required()
      ->check(CLI::IsMember({"inspect", "clear"}));
  cache_cmd->add_option("--cache", cache_file, "gamma cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (*bound) {
    try {
      config.dimensions = parse_dimension_list(dims_text);
      config.method = method == "insphere" ? BoundMethod::InsphereRatio : BoundMethod::Blichfeldt;
      config.gauge = parse_gauge_kind(gauge);
      config.kl_window = window == "extended" ? KlWindow::Extended : KlWindow::Strict;
      if (!phi_text.empty()) config.phi_grid = parse_angle_grid(phi_text);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitInputError;
    }
    config.blichfeldt.fixed_rho_fraction = rho_fraction;
    if (!cache.empty()) config.cache_path = cache;
    if (!ball_table.empty()) config.ball_table_path = ball_table;
    return cmd_bound(config, std::cout, std::cerr);
  }
  if (*ingest) return cmd_ingest_ball_table(ingest_path, std::cout, std::cerr);
  if (*plot) {
    std::vector<std::filesystem::path> paths(plot_inputs.begin(), plot_inputs.end());
    return cmd_plot(paths, plot_labels, plot_log, std::cout, std::cerr);
  }
  std::optional<std::filesystem::path> cache_path;
  if (!cache_file.empty()) cache_path = cache_file;
  return cmd_cache(cache_action, cache_path, std::cout, std::cerr);
}
