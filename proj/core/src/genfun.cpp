#include "nusamp/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nusamp/errors.hpp"
#include "nusamp/parallel.hpp"
#include "nusamp/summation.hpp"

namespace nusamp {

namespace {
constexpr double kPi = std::numbers::pi;
}

ProductWindow ProductWindow::automatic(std::int64_t N) {
  return {std::max<std::int64_t>({512, 8 * N})};
}

ProductWindow ProductWindow::automatic_wide(std::int64_t N) {
  return {std::max<std::int64_t>({512, 8 * N, 16 * N * N})};
}

std::complex<double> Rectangle::boundary_point(double s) const {
  const double w = t_plus - t_minus;
  const double h = s_plus - s_minus;
  const double p = perimeter();
  s = std::fmod(s, p);
  if (s < 0.0) s += p;
  if (s <= w) return {t_minus + s, s_minus};
  s -= w;
  if (s <= h) return {t_plus, s_minus + s};
  s -= h;
  if (s <= w) return {t_plus - s, s_plus};
  s -= w;
  return {t_minus, s_plus - s};
}

GeneratingFunction::GeneratingFunction(const SamplingSequence& seq, ProductWindow window)
    : M_(window.M_prod) {
  if (M_ < 1) throw DomainError("product window must have M_prod >= 1");
  nodes_ = seq.window(-M_, M_);
  inv_nodes_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) inv_nodes_[i] = nodes_[i] == 0.0 ? 0.0 : 1.0 / nodes_[i];
  pair_sum_.assign(static_cast<std::size_t>(M_ + 1), 0.0);
  pair_prod_.assign(static_cast<std::size_t>(M_ + 1), 0.0);
  for (std::int64_t k = 1; k <= M_; ++k) {
    const double a = inv_nodes_[static_cast<std::size_t>(M_ + k)];
    const double b = inv_nodes_[static_cast<std::size_t>(M_ - k)];
    pair_sum_[static_cast<std::size_t>(k)] = a + b;
    pair_prod_[static_cast<std::size_t>(k)] = a * b;
  }
}

std::optional<std::int64_t> GeneratingFunction::node_index(std::complex<double> z) const {
  if (z.imag() != 0.0) return std::nullopt;
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), z.real());
  if (it != nodes_.end() && *it == z.real()) return static_cast<std::int64_t>(it - nodes_.begin()) - M_;
  return std::nullopt;
}

std::int64_t GeneratingFunction::near_count(double radius) const {
  const double reach = 2.0 * radius + 2.0;
  std::int64_t near = 0;
  while (near < M_ && (std::abs(node(near + 1)) <= reach || std::abs(node(-near - 1)) <= reach)) ++near;
  return near;
}

LogValue GeneratingFunction::phi(std::complex<double> z) const {
  if (node_index(z)) return LogValue::zero();
  // Factors with |lambda_k| close to |z| are multiplied directly as
  // (lambda_k - z)/lambda_k. The remaining +-k pairs equal 1 + w_k with
  // w_k = -z a_k + z^2 b_k small, and their logs are summed through log1p
  // with compensation so that rounding does not grow with M.
  const std::int64_t near = near_count(std::abs(z));
  ScaledProduct prod;
  prod.multiply(z);
  for (std::int64_t k = 1; k <= near; ++k) {
    for (std::int64_t idx : {k, -k}) {
      const double lam = node(idx);
      prod.multiply((lam - z) / lam);
    }
  }
  CompensatedSum log_mag;
  CompensatedSum angle;
  if (z.imag() == 0.0) {
    const double x = z.real();
    const double x2 = x * x;
    for (std::int64_t k = near + 1; k <= M_; ++k) {
      const auto i = static_cast<std::size_t>(k);
      log_mag.add(std::log1p(x2 * pair_prod_[i] - x * pair_sum_[i]));
    }
  } else {
    const std::complex<double> z2 = z * z;
    for (std::int64_t k = near + 1; k <= M_; ++k) {
      const auto i = static_cast<std::size_t>(k);
      const std::complex<double> w = z2 * pair_prod_[i] - z * pair_sum_[i];
      log_mag.add(0.5 * std::log1p(2.0 * w.real() + std::norm(w)));
      angle.add(std::atan2(w.imag(), 1.0 + w.real()));
    }
  }
  const double theta = angle.value();
  return prod.value() * LogValue{log_mag.value(), {std::cos(theta), std::sin(theta)}};
}

LogValue GeneratingFunction::phi_fast(std::complex<double> z) const {
  if (node_index(z)) return LogValue::zero();
  const std::int64_t near = near_count(std::abs(z));
  ScaledProduct prod;
  prod.multiply(z);
  for (std::int64_t k = 1; k <= near; ++k) {
    for (std::int64_t idx : {k, -k}) {
      const double lam = node(idx);
      prod.multiply((lam - z) / lam);
    }
  }
  const std::complex<double> z2 = z * z;
  for (std::int64_t k = near + 1; k <= M_; ++k) {
    const auto i = static_cast<std::size_t>(k);
    prod.multiply(1.0 - z * pair_sum_[i] + z2 * pair_prod_[i]);
  }
  return prod.value();
}

LogValue GeneratingFunction::phi_prime_at(std::int64_t n) const {
  if (n < -M_ || n > M_) throw DomainError("phi_prime_at requires |n| <= M_prod");
  if (n == 0) return LogValue{0.0, {1.0, 0.0}};
  // -prod_{k != 0, n} (1 - lambda_n / lambda_k), split like phi().
  const double x = node(n);
  const std::int64_t near = std::max(near_count(std::abs(x)), std::abs(n));
  ScaledProduct prod;
  prod.multiply_real(-1.0);
  for (std::int64_t k = 1; k <= near; ++k) {
    for (std::int64_t idx : {k, -k}) {
      if (idx == n) continue;
      const double lam = node(idx);
      prod.multiply_real((lam - x) / lam);
    }
  }
  CompensatedSum log_mag;
  const double x2 = x * x;
  for (std::int64_t k = near + 1; k <= M_; ++k) {
    const auto i = static_cast<std::size_t>(k);
    log_mag.add(std::log1p(x2 * pair_prod_[i] - x * pair_sum_[i]));
  }
  return prod.value() * LogValue{log_mag.value(), {1.0, 0.0}};
}

std::complex<double> GeneratingFunction::basis(std::int64_t n, std::complex<double> z) const {
  if (n < -M_ || n > M_) throw DomainError("basis requires |n| <= M_prod");
  const double lam_n = node(n);
  if (z == std::complex<double>(lam_n, 0.0)) return 1.0;
  if (node_index(z)) return 0.0;
  ScaledProduct prod;
  for (std::int64_t k = -M_; k <= M_; ++k) {
    if (k == n) continue;
    const double lam = node(k);
    prod.multiply((z - lam) / (lam_n - lam));
  }
  return prod.value().linear();
}

std::complex<double> GeneratingFunction::basis_from(std::int64_t n, std::complex<double> z,
                                                    const LogValue& phi_z,
                                                    const LogValue& phi_prime_n) const {
  const double lam_n = node(n);
  if (z == std::complex<double>(lam_n, 0.0)) return 1.0;
  if (phi_z.is_zero()) return 0.0;
  const LogValue denom = phi_prime_n * LogValue::from_linear(z - lam_n);
  return (phi_z / denom).linear();
}

double GeneratingFunction::log_weighted(std::complex<double> z) const {
  return phi_fast(z).log_magnitude - kPi * std::abs(z.imag());
}

double GeneratingFunction::floor(const Rectangle& rect, double spacing, unsigned threads) const {
  if (!(spacing > 0.0)) throw DomainError("floor sampling spacing must be positive");
  const double p = rect.perimeter();
  const auto count = static_cast<std::size_t>(std::ceil(p / spacing));
  const double h = p / static_cast<double>(count);
  std::vector<double> values(count);
  parallel_for(count, threads, [&](std::size_t i) {
    values[i] = log_weighted(rect.boundary_point(h * static_cast<double>(i)));
  });

  // Local minima of the cyclic sample sequence, smallest first.
  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < count; ++i) {
    const double prev = values[(i + count - 1) % count];
    const double next = values[(i + 1) % count];
    if (values[i] <= prev && values[i] <= next) minima.push_back(i);
  }
  std::sort(minima.begin(), minima.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  });
  if (minima.size() > 8) minima.resize(8);

  double best = *std::min_element(values.begin(), values.end());
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t i : minima) {
    double a = h * (static_cast<double>(i) - 1.0);
    double b = h * (static_cast<double>(i) + 1.0);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = log_weighted(rect.boundary_point(c));
    double fd = log_weighted(rect.boundary_point(d));
    for (int it = 0; it < 40 && b - a > 1e-10 * std::max(1.0, p); ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = log_weighted(rect.boundary_point(c));
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = log_weighted(rect.boundary_point(d));
      }
    }
    best = std::min({best, fc, fd});
  }
  return kFloorSafety * std::exp(best);
}

LogValue phi(const SamplingSequence& seq, std::complex<double> z, ProductWindow w) {
  return GeneratingFunction(seq, w).phi(z);
}

LogValue phi_prime_at(const SamplingSequence& seq, std::int64_t n, ProductWindow w) {
  return GeneratingFunction(seq, w).phi_prime_at(n);
}

std::complex<double> basis(const SamplingSequence& seq, std::int64_t n, std::complex<double> z, ProductWindow w) {
  return GeneratingFunction(seq, w).basis(n, z);
}

double phi_floor(const SamplingSequence& seq, const Rectangle& rect, double spacing, ProductWindow w) {
  return GeneratingFunction(seq, w).floor(rect, spacing);
}

}  // namespace nusamp
