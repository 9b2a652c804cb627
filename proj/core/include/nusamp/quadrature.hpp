#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace nusamp {

struct QuadratureOptions {
  double rel_tolerance = 1e-10;  // relative to the integral of |integrand|
  double abs_tolerance = 0.0;
  std::size_t max_panels = std::size_t{1} << 16;
};

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;  // sum of per-panel |K15 - G7|
  double l1_norm = 0.0;         // integral of |integrand|
  std::size_t panels = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b]: the panel with the largest
// embedded error estimate is bisected until the total estimate drops below
// max(abs_tolerance, rel_tolerance * l1_norm) or the panel budget runs out.
// Panel contributions are summed in left-to-right order.
QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

// Real-valued convenience wrapper.
QuadratureResult integrate_real(const std::function<double(double)>& f, double a, double b,
                                const QuadratureOptions& opts = {});

}  // namespace nusamp
