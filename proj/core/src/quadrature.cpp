#include "nusamp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "nusamp/summation.hpp"

namespace nusamp {

namespace {

// Gauss-Kronrod 15-point abscissae on [-1, 1] (non-negative half) and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::complex<double> value;
  double error = 0.0;
  double l1 = 0.0;
};

Panel gk15(const std::function<std::complex<double>(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const std::complex<double> fc = f(c);
  std::complex<double> kron = fc * kWgk[7];
  std::complex<double> gauss = fc * kWg[3];
  double l1 = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[static_cast<std::size_t>(j)];
    const std::complex<double> f1 = f(c - dx);
    const std::complex<double> f2 = f(c + dx);
    kron += (f1 + f2) * kWgk[static_cast<std::size_t>(j)];
    l1 += (std::abs(f1) + std::abs(f2)) * kWgk[static_cast<std::size_t>(j)];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[static_cast<std::size_t>(j / 2)];
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  p.error = std::abs((kron - gauss) * h);
  p.l1 = l1 * std::abs(h);
  return p;
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

}  // namespace

QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  QuadratureResult r;
  if (a == b) {
    r.converged = true;
    return r;
  }
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  Panel first = gk15(f, a, b);
  double total_error = first.error;
  double total_l1 = first.l1;
  heap.push(first);
  std::size_t panels = 1;

  auto target = [&] { return std::max(opts.abs_tolerance, opts.rel_tolerance * total_l1); };
  while (total_error > target() && panels < opts.max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    total_l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
    ++panels;
    // Refresh the running sums occasionally to shed accumulated drift.
    if (panels % 256 == 0) {
      auto copy = heap;
      total_error = 0.0;
      total_l1 = 0.0;
      while (!copy.empty()) {
        total_error += copy.top().error;
        total_l1 += copy.top().l1;
        copy.pop();
      }
    }
  }

  std::vector<Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  ComplexCompensatedSum value;
  CompensatedSum err;
  CompensatedSum l1;
  for (const auto& p : all) {
    value.add(p.value);
    err.add(p.error);
    l1.add(p.l1);
  }
  r.value = value.value();
  r.error_estimate = err.value();
  r.l1_norm = l1.value();
  r.panels = panels;
  r.converged = r.error_estimate <= std::max(opts.abs_tolerance, opts.rel_tolerance * r.l1_norm);
  return r;
}

QuadratureResult integrate_real(const std::function<double(double)>& f, double a, double b,
                                const QuadratureOptions& opts) {
  return integrate([&](double t) { return std::complex<double>(f(t), 0.0); }, a, b, opts);
}

}  // namespace nusamp
