#include "nusamp/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "nusamp/errors.hpp"
#include "nusamp/root_finding.hpp"

namespace nusamp {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) keyed by (seed, n); no generator state.
double counter_uniform(std::uint64_t seed, std::int64_t n) {
  const std::uint64_t key = splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(n) + 0x632BE59BD9B4E019ull);
  return static_cast<double>(splitmix64(key) >> 11) * 0x1p-53;
}

double perturbed_node(const PerturbedUniform& p, std::int64_t n) {
  if (n == 0) return 0.0;
  const double shift = p.max_shift * (2.0 * counter_uniform(p.seed, n) - 1.0);
  const double base = static_cast<double>(n);
  double value = base + shift;
  // Keep |lambda_n - n| <= L after rounding of the sum.
  while (std::abs(value - base) > p.max_shift) value = std::nextafter(value, base);
  return value;
}

// sin(pi x) with exact reduction against the integer n nearest x.
double sin_pi_near(double x, std::int64_t n) {
  const double t = x - static_cast<double>(n);
  const double s = std::sin(kPi * t);
  return (n % 2 == 0) ? s : -s;
}

double cos_pi_near(double x, std::int64_t n) {
  const double t = x - static_cast<double>(n);
  const double c = std::cos(kPi * t);
  return (n % 2 == 0) ? c : -c;
}

double sine_type_root(const SineTypeCrossings& s, std::int64_t n) {
  if (n == 0) return 0.0;
  // The crossing function is odd, so lambda_{-n} = -lambda_n.
  if (n < 0) return -sine_type_root(s, -n);
  const double base = static_cast<double>(n);
  auto f = [&](double t) { return s.amplitude * sin_pi_near(base + t, n) - s.g(base + t); };
  auto df = [&](double t) { return s.amplitude * kPi * cos_pi_near(base + t, n) - s.g.derivative(base + t); };
  RootOptions opts;
  opts.abs_tolerance = 1e-13;
  const RootResult r = find_bracketed_root(f, df, -0.5, 0.5, opts);
  return base + r.root;
}

}  // namespace

double SineCombo::operator()(double x) const {
  double acc = 0.0;
  for (const auto& t : terms) acc += t.coefficient * std::sin(t.frequency * x);
  return acc;
}

double SineCombo::derivative(double x) const {
  double acc = 0.0;
  for (const auto& t : terms) acc += t.coefficient * t.frequency * std::cos(t.frequency * x);
  return acc;
}

double SineCombo::abs_coefficient_sum() const {
  double acc = 0.0;
  for (const auto& t : terms) acc += std::abs(t.coefficient);
  return acc;
}

struct SamplingSequence::Cache {
  std::shared_mutex mutex;
  std::unordered_map<std::int64_t, double> values;
};

SamplingSequence::SamplingSequence(SequenceKind kind)
    : kind_(std::move(kind)), cache_(std::make_shared<Cache>()) {}

double SamplingSequence::base_at(std::int64_t n) const {
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Uniform>) {
          return static_cast<double>(n);
        } else if constexpr (std::is_same_v<K, PerturbedUniform>) {
          return perturbed_node(k, n);
        } else {
          {
            std::shared_lock lock(cache_->mutex);
            if (auto it = cache_->values.find(n); it != cache_->values.end()) return it->second;
          }
          const double v = sine_type_root(k, n);
          std::unique_lock lock(cache_->mutex);
          cache_->values.emplace(n, v);  // racing writers store identical values
          return v;
        }
      },
      kind_);
}

double SamplingSequence::at(std::int64_t n) const {
  if (offset_ == 0) return base_at(n);
  return base_at(n + offset_) - origin_;
}

std::vector<double> SamplingSequence::window(std::int64_t lo, std::int64_t hi) const {
  std::vector<double> out;
  if (hi < lo) return out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back(at(n));
  return out;
}

double SamplingSequence::separation_floor() const {
  if (std::holds_alternative<Uniform>(kind_)) return 1.0;
  if (const auto* p = std::get_if<PerturbedUniform>(&kind_)) return 1.0 - 2.0 * p->max_shift;
  return 0.0;
}

SamplingSequence SamplingSequence::recentered(std::int64_t k) const {
  SamplingSequence out = *this;
  out.offset_ = offset_ + k;
  out.origin_ = base_at(out.offset_);
  return out;
}

std::int64_t SamplingSequence::nearest_index(double x) const {
  // All supported families stay within 1/2 of the integers.
  auto n = static_cast<std::int64_t>(std::llround(x));
  double best = std::abs(at(n) - x);
  for (std::int64_t c : {n - 1, n + 1}) {
    const double d = std::abs(at(c) - x);
    if (d < best) {
      best = d;
      n = c;
    }
  }
  return n;
}

double SamplingSequence::crossing_residual(double x) const {
  const auto* s = std::get_if<SineTypeCrossings>(&kind_);
  if (!s) return 0.0;
  const double xb = x + origin_;
  const auto n = static_cast<std::int64_t>(std::llround(xb));
  return s->amplitude * sin_pi_near(xb, n) - s->g(xb);
}

SamplingSequence make_uniform() { return SamplingSequence(Uniform{}); }

SamplingSequence make_perturbed(double max_shift, std::uint64_t seed) {
  if (!(max_shift >= 0.0 && max_shift < 0.5)) {
    throw DomainError("perturbed sequence requires 0 <= L < 1/2, got L = " + std::to_string(max_shift));
  }
  return SamplingSequence(PerturbedUniform{max_shift, seed});
}

SamplingSequence make_sine_type(double amplitude, SineCombo g) {
  for (const auto& t : g.terms) {
    if (!(t.frequency > 0.0 && t.frequency < kPi)) {
      throw DomainError("sine-type combination frequencies must lie in (0, pi)");
    }
  }
  if (!(g.abs_coefficient_sum() < amplitude)) {
    throw DomainError("sine-type crossings require sum |c_j| < A");
  }
  return SamplingSequence(SineTypeCrossings{amplitude, std::move(g)});
}

ValidationReport validate(const SamplingSequence& seq, std::int64_t window) {
  if (window < 1) throw DomainError("validation window must be >= 1");
  ValidationReport r;
  r.window = window;
  const std::vector<double> nodes = seq.window(-window, window);
  auto lam = [&](std::int64_t n) { return nodes[static_cast<std::size_t>(n + window)]; };

  r.origin_is_zero = lam(0) == 0.0;
  r.strictly_increasing = true;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (std::int64_t n = -window; n < window; ++n) {
    const double gap = lam(n + 1) - lam(n);
    if (!(gap > 0.0)) r.strictly_increasing = false;
    r.min_gap = std::min(r.min_gap, gap);
  }
  for (std::int64_t n = 1; n <= window; ++n) {
    r.symmetry_budget = std::max(r.symmetry_budget, std::abs(lam(n) + lam(-n)));
  }
  const double floor = seq.separation_floor();
  r.separation_ok = r.min_gap > 0.0 && r.min_gap >= floor;

  if (const auto* p = std::get_if<PerturbedUniform>(&seq.kind()); p && seq.index_offset() == 0) {
    for (std::int64_t n = -window; n <= window; ++n) {
      if (std::abs(lam(n) - static_cast<double>(n)) > p->max_shift) r.perturbation_ok = false;
    }
  }
  r.density_ratio = lam(window) / static_cast<double>(window);
  if (const auto* s = std::get_if<SineTypeCrossings>(&seq.kind())) {
    r.density_ok = std::abs(r.density_ratio - 1.0) <= 0.02;
    for (std::int64_t n = -window; n <= window; ++n) {
      r.max_root_residual = std::max(r.max_root_residual, std::abs(seq.crossing_residual(lam(n))));
    }
    (void)s;
  }
  return r;
}

}  // namespace nusamp
