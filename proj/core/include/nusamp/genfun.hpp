#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "nusamp/log_value.hpp"
#include "nusamp/sequences.hpp"

namespace nusamp {

// Truncation of the symmetric canonical product to factors 0 < |k| <= M.
struct ProductWindow {
  std::int64_t M_prod = 512;

  // Default window for a plan with sample window N.
  static ProductWindow automatic(std::int64_t N);
  // Wider default for hyper-Gaussian windows. Truncation inflates the
  // edge basis functions by about exp(n^2 / 2M), which the flatter window
  // does not suppress, so M grows like N^2 here.
  static ProductWindow automatic_wide(std::int64_t N);
};

// Axis-aligned rectangle [t_minus, t_plus] x [s_minus, s_plus].
struct Rectangle {
  double t_minus = 0.0;
  double t_plus = 0.0;
  double s_minus = 0.0;
  double s_plus = 0.0;

  double perimeter() const { return 2.0 * ((t_plus - t_minus) + (s_plus - s_minus)); }
  // Boundary point at arclength s, counterclockwise from the lower-left corner.
  std::complex<double> boundary_point(double s) const;
};

// The truncated generating function
//   phi(z) = z * prod_{0<|k|<=M} (1 - z / lambda_k)
// over a snapshot of the nodes lambda_{-M..M}. For Lambda = Z this tends to
// sin(pi z) / pi. All products are accumulated with a scaled mantissa and
// returned in log form.
class GeneratingFunction {
 public:
  GeneratingFunction(const SamplingSequence& seq, ProductWindow window);

  std::int64_t M() const { return M_; }
  double node(std::int64_t k) const { return nodes_[static_cast<std::size_t>(k + M_)]; }
  const std::vector<double>& nodes() const { return nodes_; }

  // Index k with lambda_k == z exactly, if any (|k| <= M).
  std::optional<std::int64_t> node_index(std::complex<double> z) const;

  LogValue phi(std::complex<double> z) const;
  // Plain scaled product over all factors; ~1e-14 relative accuracy at
  // M ~ 10^4, used where speed matters more than the last digits.
  LogValue phi_fast(std::complex<double> z) const;
  // Derivative at lambda_n with the vanishing factor removed analytically.
  LogValue phi_prime_at(std::int64_t n) const;

  // Finite Lagrange product prod_{|k|<=M, k!=n} (z - lambda_k)/(lambda_n - lambda_k).
  std::complex<double> basis(std::int64_t n, std::complex<double> z) const;
  // Same value from precomputed phi(z) and phi'(lambda_n); O(1).
  std::complex<double> basis_from(std::int64_t n, std::complex<double> z,
                                  const LogValue& phi_z, const LogValue& phi_prime_n) const;

  // log(|phi(z)| e^{-pi |Im z|}).
  double log_weighted(std::complex<double> z) const;

  // Lower estimate of min |phi(z)| e^{-pi|Im z|} on the rectangle boundary:
  // dense boundary sampling (spacing <= spacing) plus golden-section
  // refinement of the smallest local minima, times the 0.9 safety factor.
  double floor(const Rectangle& rect, double spacing, unsigned threads = 1) const;

  static constexpr double kFloorSafety = 0.9;

 private:
  // Number of leading +-k pairs treated as near factors for |z| = radius.
  std::int64_t near_count(double radius) const;

  std::int64_t M_;
  std::vector<double> nodes_;
  std::vector<double> inv_nodes_;   // 1 / lambda_k, k != 0
  std::vector<double> pair_sum_;    // 1/lambda_k + 1/lambda_{-k}, index k = 1..M
  std::vector<double> pair_prod_;   // 1/(lambda_k lambda_{-k})
};

// Free-function forms; each builds a GeneratingFunction snapshot.
LogValue phi(const SamplingSequence& seq, std::complex<double> z, ProductWindow w);
LogValue phi_prime_at(const SamplingSequence& seq, std::int64_t n, ProductWindow w);
std::complex<double> basis(const SamplingSequence& seq, std::int64_t n, std::complex<double> z, ProductWindow w);
double phi_floor(const SamplingSequence& seq, const Rectangle& rect, double spacing, ProductWindow w);

}  // namespace nusamp
