#include "nusamp/root_finding.hpp"

#include <cmath>

#include "nusamp/errors.hpp"

namespace nusamp {

RootResult find_bracketed_root(const std::function<double(double)>& f,
                               const std::function<double(double)>& df,
                               double lo, double hi, const RootOptions& opts) {
  double flo = f(lo);
  double fhi = f(hi);
  RootResult r;
  if (flo == 0.0) return {lo, 0, false};
  if (fhi == 0.0) return {hi, 0, false};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NumericalError("root bracket sign check failed");
  }

  auto bisect_once = [&] {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      return;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  };

  while (hi - lo > opts.bisect_width && r.iterations < opts.max_iterations) {
    bisect_once();
    ++r.iterations;
  }

  double x = 0.5 * (lo + hi);
  bool newton_ok = true;
  for (int i = 0; i < opts.max_newton; ++i) {
    const double fx = f(x);
    if (fx == 0.0) return {x, r.iterations, true};
    const double d = df(x);
    if (!(std::abs(d) > 0.0)) {
      newton_ok = false;
      break;
    }
    const double next = x - fx / d;
    ++r.iterations;
    if (!(next >= lo && next <= hi)) {
      newton_ok = false;
      break;
    }
    // Tighten the bracket with the sign information at x.
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (std::abs(next - x) <= opts.abs_tolerance) return {next, r.iterations, true};
    x = next;
  }
  (void)newton_ok;
  (void)fhi;

  while (hi - lo > opts.abs_tolerance && r.iterations < opts.max_iterations) {
    bisect_once();
    ++r.iterations;
  }
  if (hi - lo > opts.abs_tolerance) throw NumericalError("bracketed root did not converge");
  return {0.5 * (lo + hi), r.iterations, false};
}

}  // namespace nusamp
