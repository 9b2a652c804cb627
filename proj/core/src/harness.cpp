#include "nusamp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "nusamp/bounds.hpp"
#include "nusamp/errors.hpp"
#include "nusamp/genfun.hpp"
#include "nusamp/reconstruction.hpp"

namespace nusamp {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

std::vector<SineTerm> parse_sine_terms(const json& j) {
  std::vector<SineTerm> out;
  for (const auto& t : j) {
    if (t.is_array()) {
      out.push_back({t.at(0).get<double>(), t.at(1).get<double>()});
    } else {
      out.push_back({t.at("c").get<double>(), t.at("nu").get<double>()});
    }
  }
  return out;
}

std::vector<SincTerm> parse_sinc_terms(const json& j) {
  std::vector<SincTerm> out;
  for (const auto& t : j) {
    if (t.is_array()) {
      out.push_back({t.at(0).get<double>(), t.at(1).get<double>()});
    } else {
      out.push_back({t.at("c").get<double>(), t.at("a").get<double>()});
    }
  }
  return out;
}

double reg_decay(const ExperimentConfig& c, double sigma) {
  if (c.regularizer.kind == RegularizerKind::Gaussian) return (kPi - sigma) / 2.0;
  return hyper_constants(c.regularizer.m, sigma).mu;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  ExperimentConfig c;
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    if (doc.contains("seed")) c.rng_seed = doc.at("seed").get<std::uint64_t>();

    const json& seq = doc.at("sequence");
    c.sequence.kind = seq.at("kind").get<std::string>();
    c.sequence.L = get_or(seq, "L", 0.0);
    c.sequence.seed = get_or(seq, "seed", c.rng_seed);
    c.sequence.A = get_or(seq, "A", 1.0);
    if (seq.contains("g")) c.sequence.g = parse_sine_terms(seq.at("g"));

    const json& sig = doc.at("signal");
    c.signal.kind = sig.at("kind").get<std::string>();
    if (sig.contains("sigma")) {
      c.signal.sigma = sig.at("sigma").get<double>();
    } else if (sig.contains("sigma_over_pi")) {
      c.signal.sigma = sig.at("sigma_over_pi").get<double>() * kPi;
    } else {
      throw ConfigError("signal requires sigma or sigma_over_pi");
    }
    if (sig.contains("terms")) c.signal.terms = parse_sinc_terms(sig.at("terms"));

    if (doc.contains("regularizer")) {
      const json& reg = doc.at("regularizer");
      const std::string kind = reg.at("kind").get<std::string>();
      if (kind == "gaussian") {
        c.regularizer.kind = RegularizerKind::Gaussian;
      } else if (kind == "hyper_gaussian" || kind == "hyper-gaussian") {
        c.regularizer.kind = RegularizerKind::HyperGaussian;
      } else {
        throw ConfigError("unknown regularizer kind '" + kind + "'");
      }
      c.regularizer.m = get_or(reg, "m", 2);
    }

    if (doc.contains("N_list")) {
      const json& nl = doc.at("N_list");
      if (nl.is_array()) {
        c.N_list = nl.get<std::vector<std::int64_t>>();
      } else {
        const auto start = nl.at("start").get<std::int64_t>();
        const auto stop = nl.at("stop").get<std::int64_t>();
        const auto step = get_or<std::int64_t>(nl, "step", 1);
        if (step < 1) throw ConfigError("N_list step must be >= 1");
        for (std::int64_t n = start; n <= stop; n += step) c.N_list.push_back(n);
      }
    }
    c.grid_points = get_or<std::size_t>(doc, "grid_points", 512);
    if (doc.contains("M_prod")) {
      const json& mp = doc.at("M_prod");
      if (mp.is_string()) {
        if (mp.get<std::string>() != "auto") throw ConfigError("M_prod must be an integer or \"auto\"");
      } else {
        c.M_prod = mp.get<std::int64_t>();
      }
    }
    if (doc.contains("output")) {
      const json& out = doc.at("output");
      c.csv_path = get_or<std::string>(out, "csv", c.csv_path);
      c.json_path = get_or<std::string>(out, "json", c.json_path);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  validate_config(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

SamplingSequence build_sequence(const SequenceConfig& config) {
  try {
    if (config.kind == "uniform") return make_uniform();
    if (config.kind == "perturbed") return make_perturbed(config.L, config.seed);
    if (config.kind == "sine_type") return make_sine_type(config.A, SineCombo{config.g});
  } catch (const DomainError& e) {
    throw ConfigError(std::string("sequence: ") + e.what());
  }
  throw ConfigError("unknown sequence kind '" + config.kind + "'");
}

Signal build_signal(const SignalConfig& config) {
  try {
    if (config.kind == "sinc") return make_sinc(config.sigma);
    if (config.kind == "cos") return make_cos(config.sigma);
    if (config.kind == "sinc_squared") return make_sinc_squared(config.sigma);
    if (config.kind == "shifted_sinc_combo") return make_shifted_sinc_combo(config.sigma, config.terms);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("signal: ") + e.what());
  }
  throw ConfigError("unknown signal kind '" + config.kind + "'");
}

void validate_config(const ExperimentConfig& c) {
  if (!(c.signal.sigma > 0.0 && c.signal.sigma < kPi)) throw ConfigError("signal sigma must satisfy 0 < sigma < pi");
  (void)build_sequence(c.sequence);
  (void)build_signal(c.signal);
  if (c.regularizer.kind == RegularizerKind::HyperGaussian &&
      (c.regularizer.m < 2 || c.regularizer.m > kMaxHyperOrder)) {
    throw ConfigError("hyper-Gaussian order m must lie in [2, 20]");
  }
  for (std::size_t i = 0; i < c.N_list.size(); ++i) {
    if (c.N_list[i] < 1) throw ConfigError("N_list entries must be >= 1");
    if (i > 0 && c.N_list[i] <= c.N_list[i - 1]) throw ConfigError("N_list must be strictly increasing");
  }
  if (c.grid_points < 64) throw ConfigError("grid_points must be >= 64");
  if (c.M_prod) {
    const std::int64_t max_n = c.N_list.empty() ? 1 : c.N_list.back();
    if (*c.M_prod < 2 * max_n + 2) throw ConfigError("M_prod must be >= 2N + 2 for every N in N_list");
  }
}

LinearFit fit_rate(std::span<const std::pair<double, double>> points) {
  if (points.size() < 4) throw FitError("rate fit needs at least 4 points");
  const double n = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 1e-12 * std::max(1.0, mx * mx) * n)) throw FitError("rate fit abscissas are degenerate");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

FreeExponentFit fit_rate_free_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 4) throw FitError("free-exponent fit needs at least 4 points");
  // Normal equations for columns (log x, x, 1), solved by Gaussian
  // elimination with partial pivoting.
  double a[3][4] = {};
  for (const auto& [x, y] : points) {
    if (!(x > 0.0)) throw FitError("free-exponent fit requires positive abscissas");
    const double row[3] = {std::log(x), x, 1.0};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a[i][j] += row[i] * row[j];
      a[i][3] += row[i] * y;
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-300) throw FitError("free-exponent fit is degenerate");
    std::swap(a[col], a[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  FreeExponentFit f;
  f.exponent = a[0][3] / a[0][0];
  f.slope = a[1][3] / a[1][1];
  f.intercept = a[2][3] / a[2][2];
  if (!std::isfinite(f.exponent) || !std::isfinite(f.slope)) throw FitError("free-exponent fit is degenerate");
  return f;
}

bool monotone_with_tolerance(std::span<const double> errors, std::size_t* violations) {
  std::size_t count = 0;
  bool within = true;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] > errors[i - 1]) {
      ++count;
      if (errors[i] > 1.1 * errors[i - 1]) within = false;
    }
  }
  if (violations) *violations = count;
  return count == 0 || (count == 1 && within);
}

SweepReport sweep(const ExperimentConfig& config, unsigned threads) {
  validate_config(config);
  if (config.N_list.empty()) throw ConfigError("N_list must not be empty");
  const SamplingSequence seq = build_sequence(config.sequence);
  const Signal f = build_signal(config.signal);
  const double sigma = f.sigma();
  const bool gaussian = config.regularizer.kind == RegularizerKind::Gaussian;

  const std::int64_t max_n = config.N_list.back();
  const ValidationReport check = validate(seq, max_n + 2);
  if (!check.ok()) throw ConfigError("sampling sequence failed validation");
  const double spacing = check.min_gap / 20.0;

  SweepReport report;
  report.bound_kind = gaussian ? "theorem" : "rate_shape";
  report.dominance_checked = gaussian && (config.sequence.kind == "uniform" || config.sequence.kind == "sine_type");

  for (const std::int64_t N : config.N_list) {
    const ProductWindow window = config.M_prod ? ProductWindow{*config.M_prod}
                                               : default_window(config.regularizer.kind, N);
    const ReconstructionPlan p = plan(seq, N, window);
    const RegularizerSpec reg = make_regularizer(config.regularizer.kind, config.regularizer.m, sigma, p);
    const Reconstructor rec(f, seq, p, reg);
    const ErrorScan scan = max_error(rec, f, config.grid_points, threads);

    SweepRow row;
    row.N = N;
    row.N_star = p.N_star;
    row.max_error = scan.max_error;
    row.at_floor = scan.at_floor;
    row.argmax = scan.argmax;

    if (gaussian) {
      const GeneratingFunction& gf = rec.generating_function();
      row.contour_floor = gf.floor(contour_rectangle(p, 0.0, p.N_star), spacing, threads);
      for (std::size_t i = 0; i < scan.xs.size(); ++i) {
        const double b = gaussian_bound(f, gf, p, {scan.xs[i], 0.0}, row.contour_floor).bound_value;
        row.bound = std::max(row.bound, b);
        if (scan.errors[i] >= kErrorFloor && scan.errors[i] > b) ++row.dominance_violations;
      }
    } else {
      row.bound = hyper_rate_bound(p, config.regularizer.m, sigma, check);
    }

    for (std::int64_t k = -N; k <= N; ++k) {
      const double lam = rec.node(k);
      report.interpolation_residual = std::max(report.interpolation_residual, std::abs(rec(lam) - f(lam)));
    }
    if (report.dominance_checked && !row.at_floor) report.dominance_violations += row.dominance_violations;
    report.rows.push_back(row);
  }

  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<double, double>> raw;
  std::vector<double> live_errors;
  for (const auto& row : report.rows) {
    if (row.at_floor) continue;
    points.emplace_back(row.N_star, std::log(row.max_error) + 0.5 * std::log(row.N_star));
    raw.emplace_back(row.N_star, std::log(row.max_error));
    live_errors.push_back(row.max_error);
  }
  report.fit_points = points.size();
  if (points.size() < 4) throw FitError("fewer than 4 rows above the round-off floor");
  const LinearFit fit = fit_rate(points);
  report.fitted_slope = fit.slope;
  report.fitted_intercept = fit.intercept;
  report.predicted_slope = -reg_decay(config, sigma);
  report.slope_rel_dev = std::abs(report.fitted_slope - report.predicted_slope) / std::abs(report.predicted_slope);
  report.free_fit = fit_rate_free_exponent(raw);
  report.monotone = monotone_with_tolerance(live_errors, &report.monotone_violations);
  return report;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out = "N,N_star,max_error,bound,at_floor\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.N) + "," + format_double(r.N_star) + "," + format_double(r.max_error) + "," +
           format_double(r.bound) + "," + (r.at_floor ? "1" : "0") + "\n";
  }
  return out;
}

std::string sweep_json(const SweepReport& report, const ExperimentConfig& config) {
  ordered_json j;
  j["sequence"] = config.sequence.kind;
  j["signal"] = config.signal.kind;
  j["sigma"] = config.signal.sigma;
  j["regularizer"] = config.regularizer.kind == RegularizerKind::Gaussian ? "gaussian" : "hyper_gaussian";
  if (config.regularizer.kind == RegularizerKind::HyperGaussian) j["m"] = config.regularizer.m;
  j["grid_points"] = config.grid_points;
  j["fitted_slope"] = report.fitted_slope;
  j["fitted_intercept"] = report.fitted_intercept;
  j["predicted_slope"] = report.predicted_slope;
  j["slope_rel_dev"] = report.slope_rel_dev;
  j["fit_points"] = report.fit_points;
  if (report.free_fit) {
    j["free_fit"] = {{"exponent", report.free_fit->exponent},
                     {"slope", report.free_fit->slope},
                     {"intercept", report.free_fit->intercept}};
  }
  j["bound_kind"] = report.bound_kind;
  j["dominance_checked"] = report.dominance_checked;
  j["dominance_violations"] = report.dominance_violations;
  j["monotone"] = report.monotone;
  j["monotone_violations"] = report.monotone_violations;
  j["interpolation_residual"] = report.interpolation_residual;
  j["passed"] = report.passed();
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"N", r.N},
                    {"N_star", r.N_star},
                    {"max_error", r.max_error},
                    {"bound", r.bound},
                    {"at_floor", r.at_floor},
                    {"argmax", r.argmax},
                    {"contour_floor", r.contour_floor},
                    {"dominance_violations", r.dominance_violations}});
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace nusamp
