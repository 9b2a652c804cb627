#pragma once

#include <complex>

#include "nusamp/genfun.hpp"
#include "nusamp/reconstruction.hpp"
#include "nusamp/sequences.hpp"
#include "nusamp/signals.hpp"

namespace nusamp {

struct BoundComponents {
  double C_N_y = 0.0;
  double phi_floor = 0.0;
  double phi_at_z = 0.0;
  double exp_term = 0.0;
};

struct BoundReport {
  double bound_value = 0.0;
  BoundComponents components;
};

// C_N(y) = sqrt(2 pi / ((pi-sigma) N*)) cosh((pi-sigma) y)
//          + 4/((pi-sigma) N*) e^{(pi-sigma) y^2 / (2 N*)} / (1 - (y/N*)^2).
// Throws DomainError if |y| >= N*.
double gaussian_constant(double y, double N_star, double sigma);

// The rectangle with vertices T+- + i(y +- half_height).
Rectangle contour_rectangle(const ReconstructionPlan& p, double y, double half_height);

// Explicit error bound for the Gaussian-regularized series at z:
//   C_N(y) ||f|| |phi(z)| / (pi * floor) * e^{-(pi-sigma) N*/2},
// where `floor` must lower-bound |phi| e^{-pi|Im|} on contour_rectangle(p, y, N*).
// Requires lambda_{-1} < Re z < lambda_1 and |Im z| < N*.
BoundReport gaussian_bound(const Signal& f, const GeneratingFunction& gf, const ReconstructionPlan& p,
                           std::complex<double> z, double floor);
BoundReport gaussian_bound(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                           std::complex<double> z, double floor);

// Bound under a lower estimate |phi(z)| >= C |z|^{-p} e^{pi|Im z|} away from
// the nodes (C in the normalization phi(z) = z prod(1 - z/lambda_k)).
// Throws DomainError if C <= 0 or p < 0.
double corollary_bound(const Signal& f, const GeneratingFunction& gf, const ReconstructionPlan& p, double x,
                       double C, double p_exp);
double corollary_bound(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p, double x,
                       double C, double p_exp);

// sqrt(max(T+^2, T-^2) + N*^2).
double contour_radius(const ReconstructionPlan& p);

// Largest |lambda_N + lambda_{-N}| accepted as evidence of a bounded
// symmetry defect.
inline constexpr double kSymmetryBudgetLimit = 1.0;

// Rate shape e^{-mu_m N*} / sqrt(N*) of the hyper-Gaussian estimate; the
// leading constant is not explicit, so this is for rate fitting only.
// Throws ConfigError if the sequence report does not show a bounded
// symmetry budget.
double hyper_rate_bound(const ReconstructionPlan& p, int m, double sigma, const ValidationReport& symmetry);

}  // namespace nusamp
