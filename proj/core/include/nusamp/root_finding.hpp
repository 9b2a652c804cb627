#pragma once

#include <cmath>
#include <functional>

namespace nusamp {

struct RootResult {
  double root = 0.0;
  int iterations = 0;
  bool polished = false;  // true if Newton polishing was accepted
};

struct RootOptions {
  double bisect_width = 1e-8;   // bracket width at which Newton takes over
  double abs_tolerance = 1e-13;
  int max_newton = 20;
  int max_iterations = 200;
};

// Bracketed root of f on [lo, hi]. Bisects until the bracket is narrower
// than bisect_width, then polishes with Newton steps that must stay inside
// the bracket; any step that leaves it, or fails to shrink, falls back to
// plain bisection. Throws NumericalError if f(lo), f(hi) share a sign.
RootResult find_bracketed_root(const std::function<double(double)>& f,
                               const std::function<double(double)>& df,
                               double lo, double hi, const RootOptions& opts = {});

}  // namespace nusamp
