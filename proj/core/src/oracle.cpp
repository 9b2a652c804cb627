#include "nusamp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nusamp/errors.hpp"
#include "nusamp/quadrature.hpp"

namespace nusamp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> ipow(std::complex<double> z, int e) {
  std::complex<double> r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

// log G(w) = -rate w^2 or -rate w^{2m}.
std::complex<double> log_regularizer(const RegularizerSpec& reg, std::complex<double> w) {
  return -reg.rate * ipow(w, reg.kind == RegularizerKind::Gaussian ? 2 : 2 * reg.m);
}

void check_contour(const GeneratingFunction& gf, const ReconstructionPlan& p, std::complex<double> z,
                   const ContourSpec& c) {
  const Rectangle& r = c.rect;
  if (!(r.t_minus < z.real() && z.real() < r.t_plus && r.s_minus < z.imag() && z.imag() < r.s_plus)) {
    throw DomainError("contour oracle requires z strictly inside the rectangle");
  }
  if (gf.node_index(z)) throw DomainError("contour oracle requires z outside the sampling set");
  const std::int64_t N = p.N;
  if (!(gf.node(N) < r.t_plus && r.t_plus < gf.node(N + 1) && gf.node(-N - 1) < r.t_minus &&
        r.t_minus < gf.node(-N))) {
    throw DomainError("contour abscissas must separate lambda_{-N..N} from the remaining nodes");
  }
  if (!(r.s_minus < 0.0 && r.s_plus > 0.0)) {
    throw DomainError("contour must enclose the nodes on the real axis");
  }
}

}  // namespace

ContourSpec default_contour(const ReconstructionPlan& p, const RegularizerSpec& reg, std::complex<double> z,
                            double tolerance) {
  const double h = reg.kind == RegularizerKind::Gaussian ? p.N_star : reg.b * p.N_star;
  return {Rectangle{p.T_minus, p.T_plus, z.imag() - h, z.imag() + h}, tolerance};
}

SideIntegrals side_decomposition(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                                 const RegularizerSpec& reg, std::complex<double> z, const ContourSpec& c) {
  const GeneratingFunction gf(seq, p.window);
  check_contour(gf, p, z, c);

  auto integrand = [&](std::complex<double> zeta) -> std::complex<double> {
    const LogValue phi = gf.phi(zeta);
    const std::complex<double> scale = std::exp(log_regularizer(reg, z - zeta) - phi.log_magnitude);
    return f(zeta) * scale / (phi.phase * (zeta - z));
  };

  QuadratureOptions opts;
  opts.rel_tolerance = c.tolerance;
  SideIntegrals out;
  const Rectangle& r = c.rect;
  auto run = [&](const std::function<std::complex<double>(double)>& g, double a, double b,
                 const char* side) {
    const QuadratureResult q = integrate(g, a, b, opts);
    if (!q.converged) {
      throw NumericalError(std::string("contour quadrature did not converge on side ") + side);
    }
    out.quadrature_error += q.error_estimate;
    out.panels += q.panels;
    return q.value;
  };

  out.hor_minus = run([&](double t) { return integrand({t, r.s_minus}); }, r.t_minus, r.t_plus, "hor-");
  out.ver_plus = kI * run([&](double s) { return integrand({r.t_plus, s}); }, r.s_minus, r.s_plus, "ver+");
  out.hor_plus = -run([&](double t) { return integrand({t, r.s_plus}); }, r.t_minus, r.t_plus, "hor+");
  out.ver_minus = -kI * run([&](double s) { return integrand({r.t_minus, s}); }, r.s_minus, r.s_plus, "ver-");
  out.prefactor = gf.phi(z).linear() / (2.0 * kPi * kI);
  return out;
}

std::complex<double> residue_error(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                                   const RegularizerSpec& reg, std::complex<double> z, const ContourSpec& c) {
  return side_decomposition(f, seq, p, reg, z, c).error();
}

SideBounds side_bounds(const Signal& f, const RegularizerSpec& reg,
                       std::complex<double> z, const ContourSpec& c, double floor) {
  if (!(floor > 0.0)) throw DomainError("side_bounds requires a positive floor");
  const Rectangle& r = c.rect;
  const double x = z.real();
  const double y = z.imag();
  const double gap = kPi - f.sigma();
  const double norm = f.sup_bound();
  QuadratureOptions opts;
  opts.rel_tolerance = 1e-12;

  auto abs_g = [&](std::complex<double> w) { return std::exp(log_regularizer(reg, w).real()); };
  auto horizontal = [&](double S) {
    const double integral =
        integrate_real([&](double t) { return abs_g({x - t, y - S}); }, r.t_minus, r.t_plus, opts).value.real();
    return norm / std::abs(S - y) * std::exp(-gap * std::abs(S)) / floor * integral;
  };
  auto vertical = [&](double T) {
    const double integral = integrate_real(
        [&](double s) { return std::exp(-gap * std::abs(s)) * abs_g({x - T, y - s}); }, r.s_minus, r.s_plus, opts)
                                .value.real();
    return norm / std::abs(T - x) / floor * integral;
  };
  return {horizontal(r.s_plus), horizontal(r.s_minus), vertical(r.t_plus), vertical(r.t_minus)};
}

double h_m(int m, double t) { return -ipow({t, 1.0}, 2 * m).real(); }

namespace {

// N (h_m(t0 + u) - h_m(t0)). Near the peak use the binomial expansion of
// (t0 + i + u)^{2m} with t0 + i = e^{i theta0} / s; its linear term vanishes
// exactly, which removes the cancellation that would otherwise swamp peaks
// of width far below ulp(h_m(t0)).
double scaled_exponent(int m, double N, double u, double s, double h0) {
  const double theta0 = kPi / (4.0 * m - 2.0);
  if (std::abs(u) * s >= 0.5) return N * (h_m(m, std::cos(theta0) / s + u) - h0);
  double sum = 0.0;
  double binom = 2.0 * m;  // C(2m, 1)
  for (int j = 2; j <= 2 * m; ++j) {
    binom *= (2.0 * m - j + 1.0) / j;
    sum += binom * std::pow(u, j) * std::pow(s, j - 2.0 * m) * std::cos((2.0 * m - j) * theta0);
  }
  return -N * sum;
}

}  // namespace

LaplaceCheck laplace_asymptotic_check(int m, double N) {
  if (m < 2) throw DomainError("laplace_asymptotic_check requires m >= 2");
  if (!(N > 0.0)) throw DomainError("laplace_asymptotic_check requires N > 0");
  const double s = std::sin(kPi / (4.0 * m - 2.0));
  const double t0 = 1.0 / std::tan(kPi / (4.0 * m - 2.0));
  const double h0 = std::pow(s, 1.0 - 2.0 * m);
  auto integrand = [&](double u) { return std::exp(scaled_exponent(m, N, u, s, h0)); };

  // Truncate where the scaled integrand drops below 1e-300.
  const double cutoff = std::log(1e-300);
  double u_end = 1.0;
  while (scaled_exponent(m, N, u_end, s, h0) > cutoff) u_end *= 2.0;

  // The peak width 1/sqrt(N |h''(t0)|) can be far below the interval
  // length; break the interval geometrically around the peak.
  const double curvature = 2.0 * m * (2.0 * m - 1.0) * std::pow(s, 3.0 - 2.0 * m);
  const double width = 1.0 / std::sqrt(N * curvature);
  std::vector<double> cuts = {-t0, 0.0, u_end};
  for (double d = width; d < std::max(t0, u_end); d *= 4.0) {
    if (d < t0) cuts.push_back(-d);
    if (d < u_end) cuts.push_back(d);
  }
  std::sort(cuts.begin(), cuts.end());

  QuadratureOptions opts;
  opts.rel_tolerance = 1e-13;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += integrate_real(integrand, cuts[i], cuts[i + 1], opts).value.real();
  }

  LaplaceCheck r;
  r.integral = total;
  r.asymptotic = std::sqrt(kPi / (m * (2.0 * m - 1.0))) * std::pow(s, m - 1.5) / std::sqrt(N);
  r.ratio = r.integral / r.asymptotic;
  return r;
}

double boundary_layer_check(double k, double b, const std::function<double(double)>& profile, double N) {
  if (!(k > 0.0 && b > 0.0 && N > 0.0)) throw DomainError("boundary_layer_check requires k, b, N > 0");
  const double f0 = profile(0.0);
  QuadratureOptions opts;
  opts.rel_tolerance = 1e-13;
  const double integral =
      integrate_real([&](double t) { return std::exp(N * (profile(t) - f0)); }, 0.0, b, opts).value.real();
  return integral * k * N;
}

HmLandscape hm_landscape(int m) {
  if (m < 2 || m > 20) throw DomainError("hm_landscape requires 2 <= m <= 20");
  HmLandscape out;
  out.m = m;
  const double denom = 4.0 * m - 2.0;
  for (int k = 0; k < m; ++k) {
    const double angle = (kPi + 2.0 * k * kPi) / denom;
    CriticalPoint cp;
    cp.k = k;
    // arg(t + i) = angle; the last one sits at angle = pi/2, i.e. t = 0.
    cp.t = (k == m - 1) ? 0.0 : std::cos(angle) / std::sin(angle);
    cp.closed_form = ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(std::sin(angle), 1.0 - 2.0 * m);
    cp.direct = h_m(m, cp.t);
    out.critical_points.push_back(cp);
  }

  const double t0 = out.critical_points.front().t;
  const double h0 = out.critical_points.front().closed_form;
  const int samples = 200000;
  double best = -std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = (t0 + 10.0) * i / samples;
    const double v = h_m(m, t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  out.grid_max = best;
  const double step = (t0 + 10.0) / samples;
  out.t0_is_global_max = best <= h0 * (1.0 + 1e-12) && std::abs(best_t - t0) <= 2.0 * step;

  const double s = std::sin(kPi / denom);
  out.second_derivative_closed = -2.0 * m * (2.0 * m - 1.0) * std::pow(s, 3.0 - 2.0 * m);
  // Central second difference with one Richardson step.
  auto central = [&](double h) { return (h_m(m, t0 + h) - 2.0 * h_m(m, t0) + h_m(m, t0 - h)) / (h * h); };
  const double h = 1e-3 * std::max(1.0, t0);
  out.second_derivative_fd = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  return out;
}

}  // namespace nusamp
