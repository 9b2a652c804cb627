#include "nusamp/bounds.hpp"

#include <cmath>
#include <numbers>

#include "nusamp/errors.hpp"
#include "nusamp/regularizers.hpp"

namespace nusamp {

namespace {
constexpr double kPi = std::numbers::pi;
}

double gaussian_constant(double y, double N_star, double sigma) {
  if (!(std::abs(y) < N_star)) throw DomainError("C_N(y) requires |y| < N_star");
  const double gap = kPi - sigma;
  const double q = y / N_star;
  return std::sqrt(2.0 * kPi / (gap * N_star)) * std::cosh(gap * y) +
         4.0 / (gap * N_star) * std::exp(gap * y * y / (2.0 * N_star)) / (1.0 - q * q);
}

Rectangle contour_rectangle(const ReconstructionPlan& p, double y, double half_height) {
  return {p.T_minus, p.T_plus, y - half_height, y + half_height};
}

BoundReport gaussian_bound(const Signal& f, const GeneratingFunction& gf, const ReconstructionPlan& p,
                           std::complex<double> z, double floor) {
  if (!(z.real() > p.lambda_minus_one && z.real() < p.lambda_plus_one)) {
    throw DomainError("gaussian_bound requires lambda_{-1} < Re z < lambda_1");
  }
  if (!(floor > 0.0)) throw DomainError("gaussian_bound requires a positive contour floor");
  const double sigma = f.sigma();
  BoundReport r;
  r.components.C_N_y = gaussian_constant(z.imag(), p.N_star, sigma);
  r.components.phi_floor = floor;
  r.components.phi_at_z = gf.phi(z).magnitude();
  r.components.exp_term = std::exp(-(kPi - sigma) * p.N_star / 2.0);
  r.bound_value = r.components.C_N_y * f.sup_bound() * r.components.phi_at_z / (kPi * floor) *
                  r.components.exp_term;
  return r;
}

BoundReport gaussian_bound(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                           std::complex<double> z, double floor) {
  return gaussian_bound(f, GeneratingFunction(seq, p.window), p, z, floor);
}

double contour_radius(const ReconstructionPlan& p) {
  const double t = std::max(p.T_plus * p.T_plus, p.T_minus * p.T_minus);
  return std::sqrt(t + p.N_star * p.N_star);
}

double corollary_bound(const Signal& f, const GeneratingFunction& gf, const ReconstructionPlan& p, double x,
                       double C, double p_exp) {
  if (!(C > 0.0)) throw DomainError("corollary_bound requires C > 0");
  if (!(p_exp >= 0.0)) throw DomainError("corollary_bound requires p >= 0");
  if (!(x > p.lambda_minus_one && x < p.lambda_plus_one)) {
    throw DomainError("corollary_bound requires lambda_{-1} < x < lambda_1");
  }
  const double gap = kPi - f.sigma();
  const double root = std::sqrt(p.N_star);
  const double lead = std::sqrt(2.0 * kPi / gap) + 4.0 / (gap * root);
  const double phi_x = gf.phi({x, 0.0}).magnitude();
  return lead * f.sup_bound() * phi_x * std::pow(contour_radius(p), p_exp) / (C * kPi * root) *
         std::exp(-gap * p.N_star / 2.0);
}

double corollary_bound(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p, double x,
                       double C, double p_exp) {
  return corollary_bound(f, GeneratingFunction(seq, p.window), p, x, C, p_exp);
}

double hyper_rate_bound(const ReconstructionPlan& p, int m, double sigma, const ValidationReport& symmetry) {
  if (!(std::isfinite(symmetry.symmetry_budget) && symmetry.symmetry_budget <= kSymmetryBudgetLimit) ||
      symmetry.window < p.N) {
    throw ConfigError("hyper-Gaussian rate requires a verified symmetry budget over the sample window");
  }
  if (!(p.N_star > 0.0)) throw DomainError("hyper_rate_bound requires N_star > 0");
  const double mu = hyper_constants(m, sigma).mu;
  return std::exp(-mu * p.N_star) / std::sqrt(p.N_star);
}

}  // namespace nusamp
