#include "nusamp/signals.hpp"

#include <cmath>
#include <numbers>

#include "nusamp/errors.hpp"

namespace nusamp {

namespace {
constexpr double kTaylorSwitch = 1e-6;
}

std::complex<double> sin_over(std::complex<double> w) {
  if (std::abs(w) < kTaylorSwitch) {
    const std::complex<double> w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sin(w) / w;
}

Signal::Signal(SignalKind kind, double sigma, std::vector<SincTerm> terms, double translation)
    : kind_(kind), sigma_(sigma), terms_(std::move(terms)), translation_(translation) {
  if (!(sigma > 0.0 && sigma < std::numbers::pi)) {
    throw DomainError("signal bandwidth must satisfy 0 < sigma < pi");
  }
  if (kind_ == SignalKind::ShiftedSincCombo) {
    sup_bound_ = 0.0;
    for (const auto& t : terms_) sup_bound_ += std::abs(t.coefficient);
  } else {
    sup_bound_ = 1.0;
  }
}

std::complex<double> Signal::eval(std::complex<double> z) const {
  z += translation_;
  switch (kind_) {
    case SignalKind::SincSigma:
      return sin_over(sigma_ * z);
    case SignalKind::CosSigma:
      return std::cos(sigma_ * z);
    case SignalKind::SincSquared: {
      const std::complex<double> s = sin_over(0.5 * sigma_ * z);
      return s * s;
    }
    case SignalKind::ShiftedSincCombo: {
      std::complex<double> acc{};
      for (const auto& t : terms_) acc += t.coefficient * sin_over(sigma_ * (z - t.shift));
      return acc;
    }
  }
  return {};
}

Signal Signal::translated(double a) const {
  return Signal(kind_, sigma_, terms_, translation_ + a);
}

Signal make_sinc(double sigma) { return Signal(SignalKind::SincSigma, sigma); }
Signal make_cos(double sigma) { return Signal(SignalKind::CosSigma, sigma); }
Signal make_sinc_squared(double sigma) { return Signal(SignalKind::SincSquared, sigma); }
Signal make_shifted_sinc_combo(double sigma, std::vector<SincTerm> terms) {
  return Signal(SignalKind::ShiftedSincCombo, sigma, std::move(terms));
}

}  // namespace nusamp
