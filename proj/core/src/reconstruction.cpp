#include "nusamp/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include "nusamp/errors.hpp"
#include "nusamp/parallel.hpp"
#include "nusamp/summation.hpp"

namespace nusamp {

ReconstructionPlan plan(const SamplingSequence& seq, std::int64_t N, ProductWindow window) {
  if (N < 1) throw DomainError("plan requires N >= 1");
  if (window.M_prod < 2 * N + 2) throw DomainError("plan requires M_prod >= 2N + 2");
  ReconstructionPlan p;
  p.N = N;
  p.window = window;
  p.T_plus = 0.5 * (seq[N] + seq[N + 1]);
  p.T_minus = 0.5 * (seq[-N] + seq[-N - 1]);
  p.lambda_minus_one = seq[-1];
  p.lambda_plus_one = seq[1];
  p.N_star = std::min(p.lambda_minus_one - p.T_minus, p.T_plus - p.lambda_plus_one);
  return p;
}

ProductWindow default_window(RegularizerKind kind, std::int64_t N) {
  return kind == RegularizerKind::Gaussian ? ProductWindow::automatic(N) : ProductWindow::automatic_wide(N);
}

ReconstructionPlan plan(const SamplingSequence& seq, std::int64_t N) {
  return plan(seq, N, ProductWindow::automatic(N));
}

RegularizerSpec make_regularizer(RegularizerKind kind, int m, double sigma, const ReconstructionPlan& p) {
  if (kind == RegularizerKind::Gaussian) return make_gaussian(sigma, p.N_star);
  return make_hyper_gaussian(m, sigma, p.N_star);
}

Reconstructor::Reconstructor(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                             const RegularizerSpec& reg)
    : plan_(p), reg_(reg), genfun_(seq, p.window) {
  if (reg.N_star != p.N_star) {
    throw ConfigError("regularizer N_star does not match the reconstruction plan");
  }
  samples_.reserve(static_cast<std::size_t>(2 * p.N + 1));
  phi_prime_.reserve(static_cast<std::size_t>(2 * p.N + 1));
  for (std::int64_t n = -p.N; n <= p.N; ++n) {
    samples_.push_back(f(genfun_.node(n)));
    phi_prime_.push_back(genfun_.phi_prime_at(n));
  }
}

std::complex<double> Reconstructor::operator()(std::complex<double> z) const {
  const LogValue phi_z = genfun_.phi(z);
  ComplexCompensatedSum acc;
  for (std::int64_t n = -plan_.N; n <= plan_.N; ++n) {
    const auto i = static_cast<std::size_t>(n + plan_.N);
    const double lam = genfun_.node(n);
    const std::complex<double> b = genfun_.basis_from(n, z, phi_z, phi_prime_[i]);
    if (b == 0.0) continue;
    acc.add(samples_[i] * b * reg_(z - lam));
  }
  return acc.value();
}

std::complex<double> reconstruct(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                                 const RegularizerSpec& reg, std::complex<double> z) {
  return Reconstructor(f, seq, p, reg)(z);
}

std::complex<double> reconstruct_recentered(const Signal& f, const SamplingSequence& seq, std::int64_t N,
                                            RegularizerKind kind, int m, double x) {
  const std::int64_t k = seq.nearest_index(x);
  const SamplingSequence local = seq.recentered(k);
  const double origin = local.origin() - seq.origin();
  const Signal shifted = f.translated(origin);
  const ReconstructionPlan p = plan(local, N, default_window(kind, N));
  const RegularizerSpec reg = make_regularizer(kind, m, f.sigma(), p);
  return reconstruct(shifted, local, p, reg, x - origin);
}

std::vector<double> open_grid(double lo, double hi, std::size_t count) {
  std::vector<double> xs(count);
  const double h = (hi - lo) / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) xs[i] = lo + (static_cast<double>(i) + 0.5) * h;
  return xs;
}

ErrorScan max_error(const Reconstructor& rec, const Signal& f, std::size_t grid_points, unsigned threads) {
  if (grid_points < 64) throw DomainError("max_error requires at least 64 grid points");
  ErrorScan scan;
  scan.xs = open_grid(rec.plan().lambda_minus_one, rec.plan().lambda_plus_one, grid_points);
  scan.errors.assign(grid_points, 0.0);
  parallel_for(grid_points, threads, [&](std::size_t i) {
    const double x = scan.xs[i];
    scan.errors[i] = std::abs(f(x) - rec(x));
  });
  const auto it = std::max_element(scan.errors.begin(), scan.errors.end());
  scan.max_error = *it;
  scan.argmax = scan.xs[static_cast<std::size_t>(it - scan.errors.begin())];
  scan.at_floor = scan.max_error < kErrorFloor;
  return scan;
}

ErrorScan max_error(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                    const RegularizerSpec& reg, std::size_t grid_points, unsigned threads) {
  return max_error(Reconstructor(f, seq, p, reg), f, grid_points, threads);
}

}  // namespace nusamp
