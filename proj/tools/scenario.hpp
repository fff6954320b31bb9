#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aho/grid_io.hpp"
#include "aho/model.hpp"

namespace aho::cli {

struct TimePoint {
  double value = 0.0;
  std::string label;
};

enum class Mode { Quantum, Classical, Both };

Mode mode_from_string(const std::string& s);

/// One fully resolved run request.  Fields left at their sentinel values
/// are derived: window < 0 means |alpha0| + 4, nmax < 0 the default
/// truncation policy.
struct Scenario {
  Complex alpha0{3.0, 0.0};
  double g = 0.1;
  double kappa = 0.0;
  std::vector<TimePoint> times{{0.0, "0"}};
  int grid_n = 301;
  double window = -1.0;
  int nmax = -1;
  Mode mode = Mode::Quantum;
  bool oracle = false;
  Normalization normalization = Normalization::Paper;
  std::uint64_t seed = 12345;
  double trace_tol = 1e-4;
  std::filesystem::path out = "out";

  double window_radius() const;
  int effective_nmax() const;
};

/// "3", "-1.5", "1.2+0.4i", "2-1i".
Complex parse_complex(const std::string& s);

/// "0.37" | "[c]pi" | "[c]pi/[d]g", e.g. "pi/2g" = pi/(2g), "3pi/4g".
TimePoint parse_time_token(const std::string& token, double g);

/// Comma list of tokens; result sorted and de-duplicated.
std::vector<TimePoint> parse_times(const std::string& csv, double g);

/// fig1..fig6 parameter regimes.
void apply_preset(Scenario& s, const std::string& name);

struct Report {
  std::vector<std::string> warnings;
  std::vector<std::string> config_failures;
  std::vector<std::string> truncation_failures;
  bool ok() const {
    return config_failures.empty() && truncation_failures.empty();
  }
};

Report validate(const Scenario& s);

/// Executes the scenario: per requested time, distribution grid CSVs, a
/// PGM heatmap per grid, and one metrics record; metrics.json at the
/// end.  Throws the project error types on failure.
void run(const Scenario& s);

}  // namespace aho::cli
