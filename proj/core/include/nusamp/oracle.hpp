#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nusamp/genfun.hpp"
#include "nusamp/reconstruction.hpp"
#include "nusamp/regularizers.hpp"
#include "nusamp/sequences.hpp"
#include "nusamp/signals.hpp"

namespace nusamp {

// Positively oriented rectangle used for the contour representation of the
// reconstruction error, with the per-side quadrature tolerance.
struct ContourSpec {
  Rectangle rect;
  double tolerance = 1e-10;
};

// Default contour for z: T+- from the plan and S+- = y +- h with h = N*
// (Gaussian) or b_m N* (hyper-Gaussian).
ContourSpec default_contour(const ReconstructionPlan& p, const RegularizerSpec& reg, std::complex<double> z,
                            double tolerance = 1e-10);

struct SideIntegrals {
  std::complex<double> hor_plus;   // upper side, right to left
  std::complex<double> hor_minus;  // lower side, left to right
  std::complex<double> ver_plus;   // right side, upwards
  std::complex<double> ver_minus;  // left side, downwards
  std::complex<double> prefactor;  // phi(z) / (2 pi i)
  double quadrature_error = 0.0;   // summed embedded error estimates
  std::size_t panels = 0;

  std::complex<double> sum() const { return hor_plus + hor_minus + ver_plus + ver_minus; }
  std::complex<double> error() const { return prefactor * sum(); }
};

// The four side integrals of f(zeta) G(z - zeta) / (phi(zeta)(zeta - z)).
// Throws DomainError if z is not strictly inside the rectangle, z is a node,
// or the rectangle does not separate lambda_{-N..N} from the other nodes;
// throws NumericalError if a side exhausts its panel budget.
SideIntegrals side_decomposition(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                                 const RegularizerSpec& reg, std::complex<double> z, const ContourSpec& c);

// phi(z)/(2 pi i) times the contour integral; equals f(z) - G_N f(z).
std::complex<double> residue_error(const Signal& f, const SamplingSequence& seq, const ReconstructionPlan& p,
                                   const RegularizerSpec& reg, std::complex<double> z, const ContourSpec& c);

// Right-hand sides of the per-side estimates for |I_hor+-| and |I_ver+-|
// given a lower bound `floor` for |phi| e^{-pi|Im|} on the contour.
struct SideBounds {
  double hor_plus = 0.0;
  double hor_minus = 0.0;
  double ver_plus = 0.0;
  double ver_minus = 0.0;
};

SideBounds side_bounds(const Signal& f, const RegularizerSpec& reg,
                       std::complex<double> z, const ContourSpec& c, double floor);

// h_m(t) = -Re (t + i)^{2m}.
double h_m(int m, double t);

struct LaplaceCheck {
  double integral = 0.0;    // int_0^inf e^{N (h_m(t) - h_m(t0))} dt
  double asymptotic = 0.0;  // sqrt(pi/(m(2m-1))) s^{m-3/2} / sqrt(N), s = sin(pi/(4m-2))
  double ratio = 0.0;
};

// Ratio of the numerically integrated int_0^inf e^{N h_m} to its Laplace
// asymptotic; both carry the common factor e^{N h_m(t0)} removed.
LaplaceCheck laplace_asymptotic_check(int m, double N);

// int_0^b e^{N f(t)} dt * k N * e^{-N f(0)}; tends to 1 when f decreases
// from its maximum at 0 with right-derivative -k.
double boundary_layer_check(double k, double b, const std::function<double(double)>& profile, double N);

struct CriticalPoint {
  int k = 0;
  double t = 0.0;
  double closed_form = 0.0;  // (-1)^k sin((pi + 2k pi)/(4m-2))^{1-2m}
  double direct = 0.0;       // h_m(t_k) by complex arithmetic
};

struct HmLandscape {
  int m = 0;
  std::vector<CriticalPoint> critical_points;  // k = 0..m-1
  double grid_max = 0.0;                       // max of h_m over a dense grid on [0, t0 + 10]
  bool t0_is_global_max = false;
  double second_derivative_fd = 0.0;
  double second_derivative_closed = 0.0;  // -2m(2m-1) sin(pi/(4m-2))^{3-2m}
};

// Requires 2 <= m <= 20.
HmLandscape hm_landscape(int m);

}  // namespace nusamp
