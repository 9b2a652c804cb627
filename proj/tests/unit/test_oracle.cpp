#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "nusamp/errors.hpp"
#include "nusamp/oracle.hpp"
#include "nusamp/reconstruction.hpp"

using namespace nusamp;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Case {
  Signal f;
  SamplingSequence seq;
  ReconstructionPlan p;
  RegularizerSpec reg;
};

Case make_case(SamplingSequence seq, RegularizerKind kind, std::int64_t N = 3) {
  Signal f = make_cos(kPi / 2);
  const auto p = plan(seq, N, default_window(kind, N));
  const auto reg = make_regularizer(kind, 2, f.sigma(), p);
  return {f, std::move(seq), p, reg};
}

cd direct_error(const Case& c, cd z) { return c.f(z) - reconstruct(c.f, c.seq, c.p, c.reg, z); }

}  // namespace

TEST(Residue, UniformGaussianMatchesDirectErrorOnRealAndComplexPoints) {
  const auto c = make_case(make_uniform(), RegularizerKind::Gaussian);
  ContourSpec contour{{-3.5, 3.5, -2.5, 2.5}, 1e-10};
  for (cd z : {cd{0.3, 0.0}, cd{0.3, 0.2}}) {
    const cd direct = direct_error(c, z);
    const cd via = residue_error(c.f, c.seq, c.p, c.reg, z, contour);
    EXPECT_LE(std::abs(direct - via), 1e-8 * std::abs(direct)) << z;
  }
}

TEST(Residue, HoldsForEveryFamilyAndRegularizer) {
  const std::vector<SamplingSequence> seqs = {make_uniform(), make_perturbed(0.2, 1),
                                              make_sine_type(1.0, SineCombo{{{0.3, 1.0}}})};
  for (const auto& seq : seqs) {
    for (auto kind : {RegularizerKind::Gaussian, RegularizerKind::HyperGaussian}) {
      for (std::int64_t N : {2, 5}) {
        const auto c = make_case(seq, kind, N);
        for (cd z : {cd{0.3, 0.0}, cd{-0.2, 0.4}}) {
          const cd direct = direct_error(c, z);
          const cd via = residue_error(c.f, c.seq, c.p, c.reg, z, default_contour(c.p, c.reg, z));
          EXPECT_LE(std::abs(direct - via), 1e-8 * std::max(std::abs(direct), 1e-12));
        }
      }
    }
  }
}

TEST(Residue, DecompositionSumsToTheResidueError) {
  const auto c = make_case(make_perturbed(0.2, 1), RegularizerKind::HyperGaussian);
  const cd z{0.3, 0.2};
  const auto contour = default_contour(c.p, c.reg, z);
  const auto sides = side_decomposition(c.f, c.seq, c.p, c.reg, z, contour);
  const cd total = residue_error(c.f, c.seq, c.p, c.reg, z, contour);
  EXPECT_LE(std::abs(sides.prefactor * sides.sum() - total), 1e-12 * std::abs(total));
}

TEST(Residue, RealSymmetricSetupGivesConjugateHorizontalSides) {
  // Real-on-real integrand and S- = -S+ make I_hor- = -conj(I_hor+).
  const auto c = make_case(make_uniform(), RegularizerKind::Gaussian, 4);
  const auto sides = side_decomposition(c.f, c.seq, c.p, c.reg, 0.3, default_contour(c.p, c.reg, 0.3));
  EXPECT_LE(std::abs(sides.hor_minus + std::conj(sides.hor_plus)), 1e-10 * std::abs(sides.hor_plus));
}

TEST(Residue, TighterToleranceStaysWithinReportedError) {
  const auto c = make_case(make_sine_type(1.0, SineCombo{{{0.3, 1.0}}}), RegularizerKind::Gaussian);
  const cd z{0.1, 0.3};
  const auto loose = side_decomposition(c.f, c.seq, c.p, c.reg, z, default_contour(c.p, c.reg, z, 1e-8));
  const auto tight = side_decomposition(c.f, c.seq, c.p, c.reg, z, default_contour(c.p, c.reg, z, 5e-9));
  EXPECT_LE(std::abs(loose.error() - tight.error()), std::abs(loose.prefactor) * loose.quadrature_error);
}

TEST(Residue, RejectsBadContours) {
  const auto c = make_case(make_uniform(), RegularizerKind::Gaussian);
  const ContourSpec contour{{-3.5, 3.5, -2.5, 2.5}, 1e-10};
  EXPECT_THROW(residue_error(c.f, c.seq, c.p, c.reg, {0.3, 3.0}, contour), DomainError);
  EXPECT_THROW(residue_error(c.f, c.seq, c.p, c.reg, 1.0, contour), DomainError);
  // A contour that leaves lambda_3 outside no longer separates the window.
  EXPECT_THROW(residue_error(c.f, c.seq, c.p, c.reg, 0.3, ContourSpec{{-3.5, 2.5, -2.5, 2.5}}), DomainError);
}

TEST(SideBounds, EachSideWithinItsEstimate) {
  const std::vector<SamplingSequence> seqs = {make_uniform(), make_perturbed(0.2, 1)};
  for (const auto& seq : seqs) {
    for (auto kind : {RegularizerKind::Gaussian, RegularizerKind::HyperGaussian}) {
      const auto c = make_case(seq, kind);
      const GeneratingFunction gf(seq, c.p.window);
      for (cd z : {cd{0.3, 0.0}, cd{0.3, 0.2}}) {
        const auto contour = default_contour(c.p, c.reg, z);
        const double floor = gf.floor(contour.rect, 0.02);
        const auto s = side_decomposition(c.f, seq, c.p, c.reg, z, contour);
        const auto b = side_bounds(c.f, c.reg, z, contour, floor);
        EXPECT_LE(std::abs(s.hor_plus), b.hor_plus);
        EXPECT_LE(std::abs(s.hor_minus), b.hor_minus);
        EXPECT_LE(std::abs(s.ver_plus), b.ver_plus);
        EXPECT_LE(std::abs(s.ver_minus), b.ver_minus);
      }
    }
  }
}

TEST(Laplace, SecondOrderPeak) {
  EXPECT_NEAR(h_m(2, std::sqrt(3.0)), 8.0, 1e-13);
  EXPECT_NEAR(1.0 / std::tan(kPi / 6), std::sqrt(3.0), 1e-15);
}

TEST(Laplace, RatioNearOneAtSecondOrder) {
  const auto r = laplace_asymptotic_check(2, 200.0);
  EXPECT_GE(r.ratio, 0.95);
  EXPECT_LE(r.ratio, 1.05);
}

TEST(Laplace, RatioConvergesWithN) {
  const double far = std::abs(laplace_asymptotic_check(3, 100.0).ratio - 1.0);
  const double near = std::abs(laplace_asymptotic_check(3, 400.0).ratio - 1.0);
  EXPECT_LT(near, far);
}

TEST(Laplace, HighOrdersResolveNarrowPeaks) {
  // N h_m(t0) reaches 1e56 at m = 20, so the peak is far narrower than
  // ulp(t0). The relative correction to the asymptotic is O(1 / (N h_m(t0)))
  // on top of the quadrature tolerance.
  for (int m : {2, 5, 10, 20}) {
    const double peak = h_m(m, 1.0 / std::tan(kPi / (4.0 * m - 2.0)));
    for (double N : {1e-3, 1.0, 100.0}) {
      if (N * peak < 10.0) continue;
      EXPECT_NEAR(laplace_asymptotic_check(m, N).ratio, 1.0, 1.0 / (N * peak) + 1e-12) << "m=" << m << " N=" << N;
    }
  }
}

TEST(Laplace, SmallNLeavesTheAsymptoticRegime) {
  const double r = laplace_asymptotic_check(2, 0.01).ratio;
  EXPECT_LT(r, 0.95);
  EXPECT_GT(r, 0.0);
}

TEST(BoundaryLayer, LinearProfileIsExact) {
  const double k = 1.5;
  const double b = 2.0;
  const double N = 3.0;
  const double r = boundary_layer_check(k, b, [&](double t) { return -k * t; }, N);
  EXPECT_NEAR(r, 1.0 - std::exp(-N * k * b), 1e-13);
  EXPECT_NEAR(boundary_layer_check(k, 50.0, [&](double t) { return -k * t; }, 40.0), 1.0, 1e-13);
}

TEST(BoundaryLayer, QuadraticAndCubicCorrectionsFade) {
  const double r2 = boundary_layer_check(2.0, 1.0, [](double t) { return -2 * t - t * t; }, 500.0);
  EXPECT_GE(r2, 0.98);
  EXPECT_LE(r2, 1.02);
  const double r3 = boundary_layer_check(1.0, 1.0, [](double t) { return -t - t * t * t; }, 1000.0);
  EXPECT_GE(r3, 0.99);
  EXPECT_LE(r3, 1.01);
}

TEST(HmLandscape, SecondOrderCriticalValues) {
  const auto l = hm_landscape(2);
  ASSERT_EQ(l.critical_points.size(), 2u);
  EXPECT_NEAR(l.critical_points[0].closed_form, 8.0, 1e-13);
  EXPECT_NEAR(l.critical_points[1].closed_form, -1.0, 1e-13);
  EXPECT_NEAR(l.critical_points[0].t, std::sqrt(3.0), 1e-14);
}

TEST(HmLandscape, ClosedFormsHoldForAllOrders) {
  for (int m = 2; m <= 20; ++m) {
    const auto l = hm_landscape(m);
    ASSERT_EQ(l.critical_points.size(), static_cast<std::size_t>(m));
    for (const auto& cp : l.critical_points) {
      EXPECT_LE(std::abs(cp.direct - cp.closed_form), 1e-12 * std::abs(cp.closed_form)) << "m=" << m;
      // Stationarity: h_m'(t) = -2m Re (t + i)^{2m-1} = 0 at every critical point.
      EXPECT_NEAR(std::pow(cd(cp.t, 1.0), 2 * m - 1).real() / std::pow(std::abs(cd(cp.t, 1.0)), 2 * m - 1), 0.0,
                  1e-12);
    }
    EXPECT_TRUE(l.t0_is_global_max) << "m=" << m;
    EXPECT_LT(l.second_derivative_closed, 0.0);
    EXPECT_LE(std::abs(l.second_derivative_fd - l.second_derivative_closed),
              1e-6 * std::abs(l.second_derivative_closed))
        << "m=" << m;
  }
}

TEST(HmLandscape, RejectsUnsupportedOrders) {
  EXPECT_THROW(hm_landscape(1), DomainError);
  EXPECT_THROW(hm_landscape(21), DomainError);
}
