#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "nusamp/errors.hpp"
#include "nusamp/harness.hpp"

using namespace nusamp;

namespace {

constexpr double kPi = std::numbers::pi;

std::string config_json(const std::string& sequence, const std::string& regularizer, const std::string& extra = "") {
  return R"({"sequence": )" + sequence + R"(, "signal": {"kind": "sinc", "sigma_over_pi": 0.5}, "regularizer": )" +
         regularizer + R"(, "N_list": {"start": 5, "stop": 35, "step": 2}, "grid_points": 512)" + extra + "}";
}

}  // namespace

TEST(ParseConfig, ReadsAllSections) {
  const auto c = parse_config(R"({
    "seed": 9,
    "sequence": {"kind": "sine_type", "A": 2.0, "g": [[0.3, 1.0], {"c": -0.2, "nu": 2.5}]},
    "signal": {"kind": "shifted_sinc_combo", "sigma": 1.5, "terms": [[0.5, 1.0], [0.5, -1.0]]},
    "regularizer": {"kind": "hyper_gaussian", "m": 3},
    "N_list": [3, 5, 9],
    "grid_points": 128,
    "M_prod": 2048,
    "output": {"csv": "a.csv", "json": "b.json"}
  })");
  EXPECT_EQ(c.rng_seed, 9u);
  EXPECT_EQ(c.sequence.kind, "sine_type");
  ASSERT_EQ(c.sequence.g.size(), 2u);
  EXPECT_EQ(c.sequence.g[1].coefficient, -0.2);
  EXPECT_EQ(c.sequence.g[1].frequency, 2.5);
  EXPECT_EQ(c.signal.sigma, 1.5);
  EXPECT_EQ(c.signal.terms.size(), 2u);
  EXPECT_EQ(c.regularizer.kind, RegularizerKind::HyperGaussian);
  EXPECT_EQ(c.regularizer.m, 3);
  EXPECT_EQ(c.N_list, (std::vector<std::int64_t>{3, 5, 9}));
  EXPECT_EQ(c.grid_points, 128u);
  EXPECT_EQ(c.M_prod, 2048);
  EXPECT_EQ(c.csv_path, "a.csv");
  EXPECT_EQ(c.json_path, "b.json");
}

TEST(ParseConfig, RangeListAndAutoWindow) {
  const auto c = parse_config(config_json(R"({"kind": "perturbed", "L": 0.2})", R"({"kind": "gaussian"})",
                                          R"(, "M_prod": "auto", "seed": 4)"));
  EXPECT_EQ(c.N_list.size(), 16u);
  EXPECT_EQ(c.N_list.front(), 5);
  EXPECT_EQ(c.N_list.back(), 35);
  EXPECT_FALSE(c.M_prod.has_value());
  EXPECT_EQ(c.sequence.seed, 4u);  // falls back to the top-level seed
  EXPECT_NEAR(c.signal.sigma, kPi / 2, 1e-16);
}

TEST(ParseConfig, RejectsInvalidDocuments) {
  const std::string uniform = R"({"kind": "uniform"})";
  const std::string gauss = R"({"kind": "gaussian"})";
  EXPECT_THROW(parse_config("{not json"), ConfigError);
  EXPECT_THROW(parse_config("[1, 2]"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sequence": {"kind": "uniform"}, "signal": {"kind": "sinc"}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sequence": {"kind": "uniform"}, "signal": {"kind": "sinc", "sigma": 3.2}})"),
               ConfigError);
  EXPECT_THROW(parse_config(config_json(R"({"kind": "perturbed", "L": 0.6})", gauss)), ConfigError);
  EXPECT_THROW(parse_config(config_json(R"({"kind": "spiral"})", gauss)), ConfigError);
  EXPECT_THROW(parse_config(config_json(uniform, R"({"kind": "boxcar"})")), ConfigError);
  EXPECT_THROW(parse_config(config_json(uniform, R"({"kind": "hyper_gaussian", "m": 1})")), ConfigError);
  EXPECT_THROW(parse_config(config_json(uniform, gauss, R"(, "M_prod": 40)")), ConfigError);
  EXPECT_THROW(parse_config(config_json(uniform, gauss, R"(, "M_prod": "big")")), ConfigError);
  EXPECT_THROW(parse_config(R"({"sequence": {"kind": "uniform"}, "signal": {"kind": "sinc", "sigma": 1},
                                "N_list": [5, 5]})"),
               ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(FitRate, ExactLineIsRecovered) {
  std::vector<std::pair<double, double>> pts;
  for (double x : {1.0, 2.5, 4.0, 7.0, 9.0}) pts.emplace_back(x, -0.5 * x + 1.0);
  const auto fit = fit_rate(pts);
  EXPECT_NEAR(fit.slope, -0.5, 1e-12);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-12);
}

TEST(FitRate, NeedsFourDistinctAbscissas) {
  const std::vector<std::pair<double, double>> two = {{1.0, 1.0}, {2.0, 0.0}};
  EXPECT_THROW(fit_rate(two), FitError);
  const std::vector<std::pair<double, double>> flat = {{3.0, 1.0}, {3.0, 2.0}, {3.0, 0.0}, {3.0, 5.0}};
  EXPECT_THROW(fit_rate(flat), FitError);
}

TEST(FitRate, FreeExponentRecoversSyntheticPrefactor) {
  std::vector<std::pair<double, double>> pts;
  for (double x = 4.5; x < 35; x += 2.0) pts.emplace_back(x, 0.3 * std::log(x) - 0.7 * x + 2.0);
  const auto fit = fit_rate_free_exponent(pts);
  EXPECT_NEAR(fit.exponent, 0.3, 1e-9);
  EXPECT_NEAR(fit.slope, -0.7, 1e-10);
  EXPECT_NEAR(fit.intercept, 2.0, 1e-8);
}

TEST(Monotone, AllowsOneSmallIncrease) {
  const std::vector<double> clean = {1.0, 0.5, 0.2, 0.1};
  const std::vector<double> one_small = {1.0, 0.5, 0.54, 0.1};
  const std::vector<double> one_big = {1.0, 0.5, 0.6, 0.1};
  const std::vector<double> two_small = {1.0, 1.05, 0.5, 0.52};
  std::size_t v = 0;
  EXPECT_TRUE(monotone_with_tolerance(clean, &v));
  EXPECT_EQ(v, 0u);
  EXPECT_TRUE(monotone_with_tolerance(one_small, &v));
  EXPECT_EQ(v, 1u);
  EXPECT_FALSE(monotone_with_tolerance(one_big));
  EXPECT_FALSE(monotone_with_tolerance(two_small, &v));
  EXPECT_EQ(v, 2u);
}

TEST(Sweep, UniformGaussianRateAndReport) {
  const auto c = parse_config(config_json(R"({"kind": "uniform"})", R"({"kind": "gaussian"})"));
  const auto r = sweep(c, 1);
  ASSERT_EQ(r.rows.size(), 16u);
  EXPECT_NEAR(r.predicted_slope, -kPi / 4, 1e-15);
  EXPECT_LE(r.slope_rel_dev, 0.15);
  EXPECT_NEAR(r.slope_rel_dev, std::abs(r.fitted_slope - r.predicted_slope) / std::abs(r.predicted_slope), 1e-15);
  EXPECT_EQ(r.bound_kind, "theorem");
  EXPECT_TRUE(r.dominance_checked);
  EXPECT_EQ(r.dominance_violations, 0u);
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.passed());
  EXPECT_LE(r.interpolation_residual, 1e-12);
  std::size_t live = 0;
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.at_floor, row.max_error < 1e-13);
    live += !row.at_floor;
    if (!row.at_floor) {
      EXPECT_GE(row.bound, row.max_error);
    }
  }
  EXPECT_EQ(r.fit_points, live);
}

TEST(Sweep, HyperGaussianPredictsSecondOrderExponent) {
  const auto c = parse_config(config_json(R"({"kind": "uniform"})", R"({"kind": "hyper_gaussian", "m": 2})"));
  const auto r = sweep(c, 1);
  EXPECT_NEAR(r.predicted_slope, -hyper_constants(2, kPi / 2).mu, 1e-15);
  EXPECT_LE(r.slope_rel_dev, 0.15);
  EXPECT_EQ(r.bound_kind, "rate_shape");
  EXPECT_FALSE(r.dominance_checked);
}

TEST(Sweep, PerturbedFreeExponentBelowTheoremPrefactor) {
  // The theorem allows at most N^{4L - 1/2}; measured prefactors fall off faster.
  const double L = 0.2;
  const auto c = parse_config(config_json(R"({"kind": "perturbed", "L": 0.2, "seed": 1})", R"({"kind": "gaussian"})"));
  const auto r = sweep(c, 1);
  EXPECT_LE(r.slope_rel_dev, 0.15);
  ASSERT_TRUE(r.free_fit.has_value());
  EXPECT_LE(r.free_fit->exponent, 4 * L - 0.5 + 0.3);
}

TEST(Sweep, OutputIndependentOfThreadCount) {
  const auto c = parse_config(R"({"sequence": {"kind": "sine_type", "A": 1, "g": [[0.3, 1.0]]},
    "signal": {"kind": "cos", "sigma_over_pi": 0.5}, "regularizer": {"kind": "gaussian"},
    "N_list": [4, 6, 8, 10, 12], "grid_points": 96})");
  const auto a = sweep(c, 1);
  const auto b = sweep(c, 3);
  EXPECT_EQ(sweep_csv(a), sweep_csv(b));
  EXPECT_EQ(sweep_json(a, c), sweep_json(b, c));
}

TEST(Sweep, TooFewRowsAboveFloorIsAFitError) {
  const auto c = parse_config(R"({"sequence": {"kind": "uniform"}, "signal": {"kind": "sinc", "sigma_over_pi": 0.5},
    "regularizer": {"kind": "gaussian"}, "N_list": [5, 44, 46, 48, 50], "grid_points": 64})");
  EXPECT_THROW(sweep(c, 1), FitError);
}

TEST(Sweep, CsvHasFixedColumns) {
  SweepReport r;
  r.rows.push_back({5, 4.5, 1e-3, 2e-2, false, 0.1, 0.2, 0});
  r.rows.push_back({45, 44.5, 1e-16, 1e-14, true, 0.1, 0.2, 0});
  EXPECT_EQ(sweep_csv(r), "N,N_star,max_error,bound,at_floor\n"
                          "5,4.5,0.001,0.02,0\n"
                          "45,44.5,9.9999999999999998e-17,1e-14,1\n");
}

TEST(BuildFromConfig, SequencesAndSignals) {
  SequenceConfig s;
  s.kind = "perturbed";
  s.L = 0.1;
  s.seed = 3;
  EXPECT_LE(std::abs(build_sequence(s)[5] - 5.0), 0.1);
  SignalConfig g;
  g.kind = "sinc_squared";
  g.sigma = 1.0;
  EXPECT_EQ(build_signal(g).kind(), SignalKind::SincSquared);
  g.kind = "triangle";
  EXPECT_THROW(build_signal(g), ConfigError);
}
