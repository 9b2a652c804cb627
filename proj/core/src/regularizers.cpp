#include "nusamp/regularizers.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nusamp/errors.hpp"

namespace nusamp {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sigma(double sigma) {
  if (!(sigma > 0.0 && sigma < kPi)) throw DomainError("regularizer requires 0 < sigma < pi");
}

void check_margin(double N_star) {
  if (!(N_star > 0.0)) throw DomainError("regularizer requires N_star > 0");
}

std::complex<double> ipow(std::complex<double> z, int e) {
  std::complex<double> r{1.0, 0.0};
  std::complex<double> base = z;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

HyperConstants hyper_constants(int m, double sigma) {
  if (m < 1) throw DomainError("hyper-Gaussian order must be >= 1");
  const double two_m = 2.0 * m;
  const double s = std::sin(kPi / (4.0 * m - 2.0));
  const double b = std::pow(two_m - 1.0, -1.0 / two_m) * std::pow(s, (two_m - 1.0) / two_m);
  const double mu = ((two_m - 1.0) / two_m) * (kPi - sigma) * b;
  return {b, mu};
}

std::complex<double> RegularizerSpec::eval(std::complex<double> z) const {
  if (kind == RegularizerKind::Gaussian) return std::exp(-rate * z * z);
  return std::exp(-rate * ipow(z, 2 * m));
}

std::complex<double> eval_G(const RegularizerSpec& spec, std::complex<double> z) { return spec.eval(z); }

RegularizerSpec make_gaussian(double sigma, double N_star) {
  check_sigma(sigma);
  check_margin(N_star);
  RegularizerSpec r;
  r.kind = RegularizerKind::Gaussian;
  r.m = 1;
  r.sigma = sigma;
  r.N_star = N_star;
  r.rate = (kPi - sigma) / (2.0 * N_star);
  r.b = 1.0;
  r.mu = (kPi - sigma) / 2.0;
  return r;
}

RegularizerSpec make_hyper_gaussian(int m, double sigma, double N_star) {
  check_sigma(sigma);
  check_margin(N_star);
  if (m < 2 || m > kMaxHyperOrder) {
    throw DomainError("hyper-Gaussian order must satisfy 2 <= m <= " + std::to_string(kMaxHyperOrder));
  }
  const HyperConstants c = hyper_constants(m, sigma);
  RegularizerSpec r;
  r.kind = RegularizerKind::HyperGaussian;
  r.m = m;
  r.sigma = sigma;
  r.N_star = N_star;
  r.rate = c.mu * std::pow(N_star, 1.0 - 2.0 * m);
  r.b = c.b;
  r.mu = c.mu;
  return r;
}

}  // namespace nusamp
