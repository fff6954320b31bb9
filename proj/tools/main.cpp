#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aho/errors.hpp"
#include "scenario.hpp"

using aho::cli::Scenario;

int main(int argc, char** argv) {
  CLI::App app{
      "Closed-form quantum and classical evolution of the diffusive Kerr "
      "oscillator: phase-space grids, metrics and heatmaps"};
  app.set_config("--config", "", "key = value file; flags override it");

  std::string preset, alpha0_str, mode_str, norm_str;
  std::vector<std::string> times_raw;
  bool validate_only = false;
  Scenario s;

  app.add_option("--preset", preset, "fig1..fig6 parameter regime");
  app.add_option("--alpha0", alpha0_str,
                 "initial coherent amplitude, e.g. 3 or 1.2+0.4i");
  app.add_option("--g", s.g, "Kerr nonlinearity strength (rad/time)");
  app.add_option("--kappa", s.kappa, "diffusion constant (1/time)");
  app.add_option("--times", times_raw,
                 "comma list: numbers or pi tokens (0,pi/2g,pi/g)")
      ->delimiter(',');
  app.add_option("--grid", s.grid_n, "samples per axis");
  app.add_option("--window", s.window,
                 "half-width of the square alpha window (default |alpha0|+4)");
  app.add_option("--nmax", s.nmax, "Fock truncation override");
  app.add_option("--mode", mode_str, "quantum|classical|both");
  app.add_flag("--oracle", s.oracle,
               "also run the brute-force oracles and record deviations");
  app.add_option("--normalization", norm_str,
                 "paper (mass 1/2) or standard (mass 1)");
  app.add_option("--seed", s.seed, "random stream seed");
  app.add_option("--trace-tol", s.trace_tol,
                 "allowed propagated trace/mass drift");
  app.add_option("--out", s.out, "output directory");
  app.add_flag("--validate-only", validate_only,
               "print the validation report and exit");

  try {
    app.parse(argc, argv);

    if (!preset.empty()) aho::cli::apply_preset(s, preset);
    if (app.count("--alpha0")) s.alpha0 = aho::cli::parse_complex(alpha0_str);
    if (app.count("--times")) {
      std::string joined;
      for (const auto& tok : times_raw)
        joined += (joined.empty() ? "" : ",") + tok;
      s.times = aho::cli::parse_times(joined, s.g);
    }
    if (app.count("--mode")) s.mode = aho::cli::mode_from_string(mode_str);
    if (app.count("--normalization"))
      s.normalization = aho::normalization_from_string(norm_str);

    if (validate_only) {
      const auto report = aho::cli::validate(s);
      for (const auto& m : report.config_failures)
        std::cout << "failure(config): " << m << '\n';
      for (const auto& m : report.truncation_failures)
        std::cout << "failure(truncation): " << m << '\n';
      for (const auto& m : report.warnings) std::cout << "warning: " << m << '\n';
      if (report.ok() && report.warnings.empty()) std::cout << "pass\n";
      return 0;
    }

    aho::cli::run(s);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const aho::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const aho::invariant_error& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return 3;
  } catch (const aho::truncation_error& e) {
    std::cerr << "truncation/stability error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
