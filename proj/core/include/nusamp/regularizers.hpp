#pragma once

#include <complex>

namespace nusamp {

enum class RegularizerKind { Gaussian, HyperGaussian };

struct HyperConstants {
  double b = 0.0;   // b_m
  double mu = 0.0;  // mu_m
};

// b_m = (2m-1)^{-1/(2m)} sin(pi/(4m-2))^{(2m-1)/(2m)},
// mu_m = ((2m-1)/(2m)) (pi - sigma) b_m. For m = 1 this gives b_1 = 1 and
// the Gaussian exponent mu_1 = (pi - sigma)/2.
HyperConstants hyper_constants(int m, double sigma);

// G(z) = exp(-rate z^2) (Gaussian) or exp(-rate z^{2m}) (hyper-Gaussian).
struct RegularizerSpec {
  RegularizerKind kind = RegularizerKind::Gaussian;
  int m = 1;
  double sigma = 0.0;
  double N_star = 0.0;
  double rate = 0.0;
  double b = 1.0;
  double mu = 0.0;

  std::complex<double> operator()(std::complex<double> z) const { return eval(z); }
  std::complex<double> eval(std::complex<double> z) const;
  // Exponent of the predicted error decay in N_star: (pi-sigma)/2 or mu_m.
  double decay_exponent() const { return mu; }
};

inline constexpr int kMaxHyperOrder = 20;

// rate = (pi - sigma) / (2 N_star). Throws DomainError unless 0 < sigma < pi
// and N_star > 0.
RegularizerSpec make_gaussian(double sigma, double N_star);
// rate = mu_m N_star^{1-2m}. Requires 2 <= m <= 20.
RegularizerSpec make_hyper_gaussian(int m, double sigma, double N_star);

std::complex<double> eval_G(const RegularizerSpec& spec, std::complex<double> z);

}  // namespace nusamp
