#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace nusamp {

// One term c * sin(nu * x) of a finite sine combination.
struct SineTerm {
  double coefficient = 0.0;
  double frequency = 0.0;  // 0 < frequency < pi
};

// g(x) = sum_j c_j sin(nu_j x). Real on the real axis, odd, g(0) = 0.
struct SineCombo {
  std::vector<SineTerm> terms;

  double operator()(double x) const;
  double derivative(double x) const;
  double abs_coefficient_sum() const;
};

struct Uniform {};

struct PerturbedUniform {
  double max_shift = 0.0;  // L in [0, 1/2)
  std::uint64_t seed = 0;
};

// Zeros of A sin(pi x) - g(x).
struct SineTypeCrossings {
  double amplitude = 1.0;
  SineCombo g;
};

using SequenceKind = std::variant<Uniform, PerturbedUniform, SineTypeCrossings>;

// An ordered real sequence {lambda_n}, n in Z, with lambda_0 = 0. Values are
// generated on demand from n alone; copies share a write-once cache.
class SamplingSequence {
 public:
  explicit SamplingSequence(SequenceKind kind);

  double operator[](std::int64_t n) const { return at(n); }
  double at(std::int64_t n) const;

  // lambda_lo .. lambda_hi inclusive.
  std::vector<double> window(std::int64_t lo, std::int64_t hi) const;

  const SequenceKind& kind() const { return kind_; }

  // Closed-form lower bound on consecutive gaps where one is known
  // (1 for uniform, 1 - 2L for perturbed); 0 when none is known.
  double separation_floor() const;

  // The sequence re-indexed around node k: mu_n = lambda_{n+k} - lambda_k.
  SamplingSequence recentered(std::int64_t k) const;
  std::int64_t index_offset() const { return offset_; }
  double origin() const { return origin_; }

  // Index of the node nearest to x.
  std::int64_t nearest_index(double x) const;

  // Residual of the crossing function A sin(pi x) - g(x); zero for other kinds.
  double crossing_residual(double x) const;

 private:
  struct Cache;

  double base_at(std::int64_t n) const;

  SequenceKind kind_;
  std::shared_ptr<Cache> cache_;
  std::int64_t offset_ = 0;
  double origin_ = 0.0;
};

SamplingSequence make_uniform();
// Throws DomainError unless 0 <= L < 1/2.
SamplingSequence make_perturbed(double max_shift, std::uint64_t seed);
// Throws DomainError unless sum |c_j| < A and 0 < nu_j < pi.
SamplingSequence make_sine_type(double amplitude, SineCombo g);

struct ValidationReport {
  std::int64_t window = 0;
  bool origin_is_zero = false;
  bool strictly_increasing = false;
  double min_gap = 0.0;            // empirical separation over |n| <= M
  double symmetry_budget = 0.0;    // max_{1<=N<=M} |lambda_N + lambda_{-N}|
  bool separation_ok = false;      // min_gap >= closed-form floor, and > 0
  bool perturbation_ok = true;     // |lambda_n - n| <= L (perturbed only)
  double density_ratio = 1.0;      // lambda_M / M
  bool density_ok = true;          // |density_ratio - 1| <= 2% (sine-type only)
  double max_root_residual = 0.0;  // sine-type only

  bool ok() const {
    return origin_is_zero && strictly_increasing && separation_ok && perturbation_ok && density_ok;
  }
};

ValidationReport validate(const SamplingSequence& seq, std::int64_t window);

}  // namespace nusamp
