#pragma once

#include <complex>
#include <vector>

namespace nusamp {

enum class SignalKind { SincSigma, CosSigma, SincSquared, ShiftedSincCombo };

struct SincTerm {
  double coefficient = 0.0;
  double shift = 0.0;
};

// Closed-form test functions in the Bernstein space of bandwidth sigma:
//   SincSigma         sin(sigma z) / (sigma z)
//   CosSigma          cos(sigma z)
//   SincSquared       (sin(sigma z / 2) / (sigma z / 2))^2
//   ShiftedSincCombo  sum_j c_j sinc_sigma(z - a_j)
// Each is entire of exponential type <= sigma and bounded on the real line
// by sup_bound(). `translation` evaluates f(z + translation) instead.
class Signal {
 public:
  Signal(SignalKind kind, double sigma, std::vector<SincTerm> terms = {}, double translation = 0.0);

  std::complex<double> operator()(std::complex<double> z) const { return eval(z); }
  std::complex<double> eval(std::complex<double> z) const;
  double eval_real(double x) const { return eval({x, 0.0}).real(); }

  SignalKind kind() const { return kind_; }
  double sigma() const { return sigma_; }
  double sup_bound() const { return sup_bound_; }
  const std::vector<SincTerm>& terms() const { return terms_; }
  double translation() const { return translation_; }

  Signal translated(double a) const;

 private:
  SignalKind kind_;
  double sigma_;
  std::vector<SincTerm> terms_;
  double translation_ = 0.0;
  double sup_bound_ = 1.0;
};

// Throws DomainError unless 0 < sigma < pi.
Signal make_sinc(double sigma);
Signal make_cos(double sigma);
Signal make_sinc_squared(double sigma);
Signal make_shifted_sinc_combo(double sigma, std::vector<SincTerm> terms);

// sin(w)/w, switching to its Taylor series when |w| < 1e-6.
std::complex<double> sin_over(std::complex<double> w);

}  // namespace nusamp
