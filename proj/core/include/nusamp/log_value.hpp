#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace nusamp {

// A complex number stored as log-magnitude plus unit phase. Zero is
// represented by a log-magnitude of -infinity.
struct LogValue {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  std::complex<double> phase{1.0, 0.0};

  static LogValue zero() { return {}; }
  static LogValue from_linear(std::complex<double> v) {
    const double a = std::abs(v);
    if (a == 0.0) return zero();
    return {std::log(a), v / a};
  }

  bool is_zero() const { return log_magnitude == -std::numeric_limits<double>::infinity(); }
  double magnitude() const { return std::exp(log_magnitude); }
  std::complex<double> linear() const { return is_zero() ? std::complex<double>{} : magnitude() * phase; }

  LogValue& operator*=(const LogValue& o) {
    log_magnitude += o.log_magnitude;
    phase *= o.phase;
    return *this;
  }
  LogValue& operator/=(const LogValue& o) {
    log_magnitude -= o.log_magnitude;
    phase /= o.phase;
    return *this;
  }
  friend LogValue operator*(LogValue a, const LogValue& b) { return a *= b; }
  friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
};

// Running product of many complex factors kept as mantissa * 2^exponent so
// that products of 10^5+ factors neither overflow nor underflow.
class ScaledProduct {
 public:
  void multiply(std::complex<double> factor) {
    mantissa_ *= factor;
    const double big = std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag()));
    if (big > kUpper || big < kLower) renormalize(big);
  }
  void multiply_real(double factor) {
    mantissa_ *= factor;
    const double big = std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag()));
    if (big > kUpper || big < kLower) renormalize(big);
  }

  LogValue value() const {
    const double a = std::abs(mantissa_);
    if (a == 0.0) return LogValue::zero();
    return {std::log(a) + exponent_ * std::numbers::ln2, mantissa_ / a};
  }

 private:
  static constexpr double kUpper = 0x1p+400;
  static constexpr double kLower = 0x1p-400;

  void renormalize(double big) {
    if (big == 0.0) return;
    int e = 0;
    std::frexp(big, &e);
    mantissa_ = {std::ldexp(mantissa_.real(), -e), std::ldexp(mantissa_.imag(), -e)};
    exponent_ += e;
  }

  std::complex<double> mantissa_{1.0, 0.0};
  long exponent_ = 0;
};

}  // namespace nusamp
