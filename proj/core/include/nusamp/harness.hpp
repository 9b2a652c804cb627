#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nusamp/regularizers.hpp"
#include "nusamp/sequences.hpp"
#include "nusamp/signals.hpp"

namespace nusamp {

struct SequenceConfig {
  std::string kind = "uniform";  // uniform | perturbed | sine_type
  double L = 0.0;
  std::uint64_t seed = 0;
  double A = 1.0;
  std::vector<SineTerm> g;
};

struct SignalConfig {
  std::string kind = "sinc";  // sinc | cos | sinc_squared | shifted_sinc_combo
  double sigma = 0.0;
  std::vector<SincTerm> terms;
};

struct RegularizerConfig {
  RegularizerKind kind = RegularizerKind::Gaussian;
  int m = 2;
};

struct ExperimentConfig {
  SequenceConfig sequence;
  SignalConfig signal;
  RegularizerConfig regularizer;
  std::vector<std::int64_t> N_list;
  std::size_t grid_points = 512;
  std::optional<std::int64_t> M_prod;  // nullopt = automatic per N
  std::string csv_path = "sweep.csv";
  std::string json_path = "sweep.json";
  std::uint64_t rng_seed = 0;
};

// Parses the JSON experiment document. Throws ConfigError on malformed
// input or parameters outside their domains.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
void validate_config(const ExperimentConfig& config);

SamplingSequence build_sequence(const SequenceConfig& config);
Signal build_signal(const SignalConfig& config);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Ordinary least squares through (x, y) points. Throws FitError with fewer
// than 4 points or degenerate abscissas.
LinearFit fit_rate(std::span<const std::pair<double, double>> points);

struct FreeExponentFit {
  double exponent = 0.0;  // a in log E = a log N* + slope N* + c
  double slope = 0.0;
  double intercept = 0.0;
};

// Least squares for log E = a log N* + slope N* + c with (N*, log E) input.
FreeExponentFit fit_rate_free_exponent(std::span<const std::pair<double, double>> points);

struct SweepRow {
  std::int64_t N = 0;
  double N_star = 0.0;
  double max_error = 0.0;
  double bound = 0.0;
  bool at_floor = false;
  double argmax = 0.0;
  double contour_floor = 0.0;             // 0 when no theorem bound is evaluated
  std::size_t dominance_violations = 0;   // grid points with error > bound
};

struct SweepReport {
  std::vector<SweepRow> rows;
  double fitted_slope = 0.0;
  double fitted_intercept = 0.0;
  double predicted_slope = 0.0;
  double slope_rel_dev = 0.0;
  std::size_t fit_points = 0;
  std::optional<FreeExponentFit> free_fit;
  std::string bound_kind;  // "theorem" (Gaussian) or "rate_shape" (hyper-Gaussian)
  bool dominance_checked = false;
  std::size_t dominance_violations = 0;
  bool monotone = true;
  std::size_t monotone_violations = 0;
  double interpolation_residual = 0.0;  // max |G_N f(lambda_k) - f(lambda_k)|, |k| <= N

  // Dominance is the hard gate. Monotonicity is reported only: the
  // hyper-Gaussian error oscillates in N.
  bool passed() const { return !dominance_checked || dominance_violations == 0; }
};

// Runs the convergence sweep. Throws FitError if fewer than 4 rows are
// above the round-off floor. Output does not depend on `threads`.
SweepReport sweep(const ExperimentConfig& config, unsigned threads = 1);

// Fixed CSV layout: N,N_star,max_error,bound,at_floor.
std::string sweep_csv(const SweepReport& report);
std::string sweep_json(const SweepReport& report, const ExperimentConfig& config);

// Monotonicity over non-floor rows: at most one increase, and only by <= 10%.
bool monotone_with_tolerance(std::span<const double> errors, std::size_t* violations = nullptr);

}  // namespace nusamp
