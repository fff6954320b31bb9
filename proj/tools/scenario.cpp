#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include <json.hpp>

#include "aho/cdynamics.hpp"
#include "aho/errors.hpp"
#include "aho/oracles.hpp"
#include "aho/phasespace.hpp"
#include "aho/propagator.hpp"

namespace aho::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw config_error("cannot parse " + what + " '" + s + "'");
  }
  if (pos != s.size())
    throw config_error("trailing characters in " + what + " '" + s + "'");
  return v;
}

}  // namespace

Mode mode_from_string(const std::string& s) {
  if (s == "quantum") return Mode::Quantum;
  if (s == "classical") return Mode::Classical;
  if (s == "both") return Mode::Both;
  throw config_error("unknown mode '" + s + "' (quantum|classical|both)");
}

double Scenario::window_radius() const {
  return window > 0.0 ? window : std::abs(alpha0) + 4.0;
}

int Scenario::effective_nmax() const {
  return nmax >= 0 ? nmax : default_nmax(alpha0);
}

Complex parse_complex(const std::string& s) {
  if (s.empty()) throw config_error("empty complex literal");
  std::string body = s;
  const bool has_i = body.back() == 'i' || body.back() == 'I';
  if (!has_i) return {parse_double(body, "complex literal"), 0.0};
  body.pop_back();
  // split at the last +/- that is not an exponent sign or leading sign
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos)
    return {0.0, body.empty() || body == "+" || body == "-"
                     ? (body == "-" ? -1.0 : 1.0)
                     : parse_double(body, "imaginary part")};
  const std::string re = body.substr(0, split);
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_double(re, "real part"), parse_double(im, "imaginary part")};
}

TimePoint parse_time_token(const std::string& token, double g) {
  const std::size_t pi_pos = token.find("pi");
  if (pi_pos == std::string::npos)
    return {parse_double(token, "time"), token};

  const std::string coef_str = token.substr(0, pi_pos);
  const double coef =
      coef_str.empty() ? 1.0 : parse_double(coef_str, "time coefficient");
  double value = coef * kPi;

  std::string rest = token.substr(pi_pos + 2);
  if (!rest.empty()) {
    if (rest.front() != '/')
      throw config_error("bad time token '" + token + "'");
    rest.erase(0, 1);
    if (rest.empty() || rest.back() != 'g')
      throw config_error("bad time token '" + token +
                         "' (denominator must end in g)");
    rest.pop_back();
    const double den = rest.empty() ? 1.0 : parse_double(rest, "denominator");
    if (g <= 0.0)
      throw config_error("time token '" + token + "' needs g > 0");
    value /= den * g;
  }
  return {value, token};
}

std::vector<TimePoint> parse_times(const std::string& csv, double g) {
  std::vector<TimePoint> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string token =
        csv.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!token.empty()) out.push_back(parse_time_token(token, g));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw config_error("no time points given");
  for (const auto& tp : out)
    if (tp.value < 0.0)
      throw config_error("negative time '" + tp.label + "'");
  std::sort(out.begin(), out.end(),
            [](const TimePoint& a, const TimePoint& b) { return a.value < b.value; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const TimePoint& a, const TimePoint& b) {
                          return a.value == b.value;
                        }),
            out.end());
  return out;
}

void apply_preset(Scenario& s, const std::string& name) {
  s.alpha0 = {3.0, 0.0};
  s.g = 0.1;
  if (name == "fig1") {
    s.kappa = 0.0;
    s.mode = Mode::Both;
    s.times = parse_times("0", s.g);
  } else if (name == "fig2") {
    s.kappa = 0.0;
    s.mode = Mode::Classical;
    s.times = parse_times("pi/2g", s.g);
  } else if (name == "fig3") {
    s.kappa = 0.01;
    s.mode = Mode::Classical;
    s.times = parse_times("pi/2g,pi/g", s.g);
  } else if (name == "fig4") {
    s.kappa = 0.0;
    s.mode = Mode::Quantum;
    s.times = parse_times("pi/2g", s.g);
  } else if (name == "fig5") {
    s.kappa = 0.0;
    s.mode = Mode::Quantum;
    s.times = parse_times("pi/g", s.g);
  } else if (name == "fig6") {
    s.kappa = 0.01;
    s.mode = Mode::Quantum;
    s.times = parse_times("pi/2g,pi/g", s.g);
  } else {
    throw config_error("unknown preset '" + name + "' (fig1..fig6)");
  }
}

Report validate(const Scenario& s) {
  Report r;
  if (!(s.g >= 0.0) || !(s.kappa >= 0.0))
    r.config_failures.push_back("g and kappa must be non-negative");
  if (s.grid_n < 2)
    r.config_failures.push_back("grid resolution must be at least 2");
  if (s.times.empty()) r.config_failures.push_back("no time points");
  for (std::size_t k = 0; k + 1 < s.times.size(); ++k)
    if (s.times[k].value > s.times[k + 1].value)
      r.config_failures.push_back("time points are not sorted");

  const double tail = poisson_tail(std::norm(s.alpha0), s.effective_nmax());
  if (tail > 1e-6)
    r.truncation_failures.push_back(
        "truncation nmax=" + std::to_string(s.effective_nmax()) +
        " leaves coherent tail mass " + std::to_string(tail));

  if (s.window_radius() < std::abs(s.alpha0) + 4.0)
    r.warnings.push_back(
        "window radius " + std::to_string(s.window_radius()) +
        " gives less than 4 unit widths beyond |alpha0|; distribution "
        "mass may be clipped");

  if (!s.times.empty() && s.kappa > 0.0) {
    // crude spread estimate: variance 1/4 + kappa t per coordinate
    const double t_last = s.times.back().value;
    const double spread =
        std::abs(s.alpha0) + 4.0 * std::sqrt(0.25 + s.kappa * t_last);
    if (s.window_radius() < spread)
      r.warnings.push_back("diffusion spreads the state beyond the window "
                           "by t=" + s.times.back().label);
  }
  if (s.oracle && s.mode != Mode::Classical) {
    const double bound =
        2.5 / master_spectral_bound(s.effective_nmax(), {s.g, s.kappa});
    if (1e-3 > bound)
      r.warnings.push_back("quantum oracle dt=1e-3 exceeds the RK4 "
                           "stability bound for this nmax; it will be "
                           "reduced automatically");
  }
  return r;
}

namespace {

struct GridMetrics {
  double mass;
  double negativity;
  double min_value;
  double max_value;
};

GridMetrics measure(const PhaseGrid& g) {
  const auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
  return {grid_integral(g), negativity_volume(g), *lo, *hi};
}

}  // namespace

void run(const Scenario& s) {
  const Report report = validate(s);
  for (const auto& w : report.warnings)
    std::cerr << "warning: " << w << '\n';
  if (!report.config_failures.empty())
    throw config_error(report.config_failures.front());
  if (!report.truncation_failures.empty())
    throw truncation_error(report.truncation_failures.front());

  const ModelParams params{s.g, s.kappa};
  const int nmax = s.effective_nmax();
  const double emit_scale =
      s.normalization == Normalization::Standard ? 2.0 : 1.0;
  const PhaseGrid geometry = PhaseGrid::window(s.window_radius(), s.grid_n);

  const FockDensity state0 = coherent_density(s.alpha0, nmax);
  const bool want_quantum = s.mode != Mode::Classical;
  const bool want_classical = s.mode != Mode::Quantum;
  CoefficientTable coeffs0;
  if (want_classical) coeffs0 = expand_initial(state0);

  std::filesystem::create_directories(s.out);
  nlohmann::json metrics = nlohmann::json::array();

  for (std::size_t k = 0; k < s.times.size(); ++k) {
    const auto& tp = s.times[k];
    nlohmann::json rec;
    rec["index"] = k;
    rec["time"] = tp.value;
    rec["time_label"] = tp.label;
    rec["normalization"] = to_string(s.normalization);

    PhaseGrid wq, wc;
    if (want_quantum) {
      const FockDensity rho_t = evolve(state0, tp.value, params, s.trace_tol);
      wq = wigner_from_density(rho_t, geometry);
      const auto stem = s.out / ("wigner_t" + std::to_string(k));
      write_grid_csv(wq, s.normalization, tp.value,
                     stem.string() + ".csv");
      write_grid_pgm(wq, stem.string() + ".pgm");

      const auto m = measure(wq);
      rec["trace"] = rho_t.rho.trace().real();
      rec["purity"] = purity(rho_t);
      rec["fidelity_alpha0"] = fidelity_coherent(rho_t, s.alpha0);
      rec["fidelity_minus_alpha0"] = fidelity_coherent(rho_t, -s.alpha0);
      rec["negativity_volume"] = m.negativity * emit_scale;
      rec["wigner_mass"] = m.mass * emit_scale;
      rec["wigner_min"] = m.min_value * emit_scale;

      if (s.oracle) {
        const double dt =
            std::min(1e-3, 2.0 / master_spectral_bound(nmax, params));
        const FockDensity ref = integrate_master(state0, tp.value, params, dt);
        rec["oracle_max_elem_diff"] =
            (rho_t.rho - ref.rho).cwiseAbs().maxCoeff();
      }
    }

    if (want_classical) {
      const CoefficientTable ct =
          evolve_classical(coeffs0, tp.value, params, s.trace_tol);
      wc = classical_grid(ct, geometry);
      const auto stem = s.out / ("classical_t" + std::to_string(k));
      write_grid_csv(wc, s.normalization, tp.value,
                     stem.string() + ".csv");
      write_grid_pgm(wc, stem.string() + ".pgm");

      const auto m = measure(wc);
      rec["classical_mass"] = m.mass * emit_scale;
      rec["classical_min"] = m.min_value * emit_scale;
      const double neg_ratio = negativity_ratio(wc);
      rec["classical_negativity_ratio"] = neg_ratio;
      if (neg_ratio > 1e-6)
        std::cerr << "warning: classical distribution at t=" << tp.label
                  << " rings below zero (ratio " << neg_ratio
                  << "); raise --nmax to resolve finer whorl structure\n";

      if (s.oracle) {
        SdeConfig cfg;
        cfg.ntraj = 100000;
        cfg.dt = s.g > 0.0 ? 1e-3 / s.g : 1e-3;
        cfg.seed = s.seed;
        const auto pts = sde_ensemble(s.alpha0, tp.value, params, cfg);
        const PhaseGrid hist = ensemble_histogram(pts, geometry);
        const auto stem = s.out / ("sde_hist_t" + std::to_string(k));
        write_grid_csv(hist, s.normalization, tp.value,
                       stem.string() + ".csv");
        rec["oracle_l1"] = l1_distance(wc, hist) * emit_scale;
      }
    }

    if (want_quantum && want_classical)
      rec["l1_quantum_classical"] = l1_distance(wq, wc) * emit_scale;

    metrics.push_back(rec);
    std::cout << "t=" << tp.label << " done\n";
  }

  std::ofstream os(s.out / "metrics.json", std::ios::binary);
  if (!os)
    throw config_error("cannot write " + (s.out / "metrics.json").string());
  os << metrics.dump(2) << '\n';
}

}  // namespace aho::cli
