#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "nusamp/genfun.hpp"
#include "nusamp/regularizers.hpp"
#include "nusamp/sequences.hpp"
#include "nusamp/signals.hpp"

namespace nusamp {

// Sample window -N..N with contour abscissas at the midpoints
// T+ = (lambda_N + lambda_{N+1})/2, T- = (lambda_{-N} + lambda_{-N-1})/2 and
// margin N_star = min(lambda_{-1} - T-, T+ - lambda_1).
struct ReconstructionPlan {
  std::int64_t N = 1;
  double T_plus = 0.0;
  double T_minus = 0.0;
  double N_star = 0.0;
  double lambda_minus_one = 0.0;
  double lambda_plus_one = 0.0;
  ProductWindow window;
};

// Requires N >= 1 and window.M_prod >= 2N + 2.
ReconstructionPlan plan(const SamplingSequence& seq, std::int64_t N, ProductWindow window);
ReconstructionPlan plan(const SamplingSequence& seq, std::int64_t N);

// Automatic product window suited to the regularizer family.
ProductWindow default_window(RegularizerKind kind, std::int64_t N);

// Regularizer of the given family built from the plan's N_star.
RegularizerSpec make_regularizer(RegularizerKind kind, int m, double sigma, const ReconstructionPlan& p);

// Evaluates G_N f(z) = sum_{n=-N}^{N} f(lambda_n) phi_{Lambda,n}(z) G(z - lambda_n)
// with samples, the generating function and phi'(lambda_n) precomputed.
// Terms are summed in index order with compensated accumulation.
class Reconstructor {
 public:
  Reconstructor(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                const RegularizerSpec& reg);

  std::complex<double> operator()(std::complex<double> z) const;

  const GeneratingFunction& generating_function() const { return genfun_; }
  const ReconstructionPlan& plan() const { return plan_; }
  const RegularizerSpec& regularizer() const { return reg_; }
  double node(std::int64_t n) const { return genfun_.node(n); }

 private:
  ReconstructionPlan plan_;
  RegularizerSpec reg_;
  GeneratingFunction genfun_;
  std::vector<std::complex<double>> samples_;  // f(lambda_n), n = -N..N
  std::vector<LogValue> phi_prime_;            // phi'(lambda_n)
};

// Throws ConfigError if reg.N_star differs from plan.N_star.
std::complex<double> reconstruct(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                                 const RegularizerSpec& reg, std::complex<double> z);

// Re-indexes the sequence so the node nearest x becomes index 0, rebuilds
// plan and regularizer there, and evaluates at x.
std::complex<double> reconstruct_recentered(const Signal& f, const SamplingSequence& seq, std::int64_t N,
                                            RegularizerKind kind, int m, double x);

inline constexpr double kErrorFloor = 1e-13;

// `count` equispaced points in (lo, hi), half a step away from each end.
std::vector<double> open_grid(double lo, double hi, std::size_t count);

struct ErrorScan {
  double max_error = 0.0;
  double argmax = 0.0;
  bool at_floor = false;
  std::vector<double> xs;
  std::vector<double> errors;
};

// Sup of |f(x) - G_N f(x)| over the open grid in (lambda_{-1}, lambda_1).
// Requires grid_points >= 64. The result does not depend on `threads`.
ErrorScan max_error(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                    const RegularizerSpec& reg, std::size_t grid_points, unsigned threads = 1);
ErrorScan max_error(const Reconstructor& rec, const Signal& f, std::size_t grid_points, unsigned threads = 1);

}  // namespace nusamp
