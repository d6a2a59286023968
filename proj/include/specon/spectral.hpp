#pragma once

// Closed-form sinc-kernel bilinear forms, band-limited concentration of
// indicator functions, the field F_A, and the rearrangement gap
//
//   H(a_1, ..., a_{2n-1}) = (I, I) - (J, J),   I = [0, T],
//
// evaluated three ways: the t-integral of the T operator, 4 T({a_j}, G(x/2))
// (authoritative), and the difference of two polynomial integrals.

#include <cstddef>
#include <vector>

#include "specon/intervals.hpp"
#include "specon/quadrature.hpp"

namespace specon {

/// int_{I1} int_{I2} sinc(x - y) dy dx via second antiderivatives.
double pair_form(const Interval& i1, const Interval& i2);
/// Sum of pair_form over all component pairs.
double set_form(const IntervalUnion& a, const IntervalUnion& b);
/// sum_{p,q} v_p w_q pair_form(I_p, I_q).
double step_form(const StepFunction& f, const StepFunction& g);

struct ConcentrationResult {
  /// set_form(W A, W A): the concentration at unit bandwidth of the dilated
  /// set. Dimensionless; lies in (0, product).
  double value = 0.0;
  double bandwidth = 1.0;
  /// W |A|, the time-bandwidth product.
  double product = 0.0;

  /// int_{-W/2}^{W/2} |chi_A^(xi)|^2 d xi = value / W, in the units of |A|.
  double band_energy() const { return value / bandwidth; }
  /// Fraction of the L2 energy |A| that lies in the band.
  double fraction() const { return value / product; }
};

/// Throws std::invalid_argument for W <= 0.
ConcentrationResult concentration(const IntervalUnion& a, double bandwidth = 1.0);

/// F_A(x) = int_A sinc(x - t) dt.
double f_field(const IntervalUnion& a, double x);
/// F over raw endpoints (zero-length components allowed).
double f_field(std::span<const double> endpoints, double x);

struct HBreakdown {
  double h_value = 0.0;
  /// (2/pi^2) int_0^1 T({a_j}, 1 - cos(pi x t)) / t^2 dt.
  double form_a = 0.0;
  /// 4 T({a_j}, G(x/2)).
  double form_b = 0.0;
  /// (1/pi^2) [ int_0^1 |1 - e^{i pi T t}|^2/t^2 - int_0^1 |sum (-1)^j e^{i pi x_j t}|^2/t^2 ].
  double form_c = 0.0;
  double form_a_error = 0.0;
  double form_c_error = 0.0;
  bool quadrature_converged = true;

  double max_disagreement() const;
};

/// Closed-form H (= form_b); the fast path for sampling.
double h_value(const GapVector& g);
/// All three forms; quadrature failure is reported in quadrature_converged.
HBreakdown h_gap(const GapVector& g, const QuadratureSpec& spec = {});

/// Phi(a, b, eps) = int_0^1 t^{-2} sin(pi a t/2) sin(pi b t/2) sin(pi eps t/2)
/// sin(pi (a+b+eps) t/2) dt, so that H((a, eps, b)) = 16/pi^2 Phi.
QuadratureResult phi_two_interval(double a, double b, double eps, const QuadratureSpec& spec = {});

/// dH/da_m for m = 1..2n-1 through the endpoint field values F_J(x_j) and
/// si(T). Throws std::domain_error when some entry is zero.
std::vector<double> grad_h(const GapVector& g);

/// d/ds H(s a)|_{s=1} = H + (2/pi^2) T({a_j}, 1 - cos(pi x)).
double scale_derivative(const GapVector& g);

struct SuperlevelReport {
  /// min_j F_A(x_j).
  double level = 0.0;
  double min_inside = 0.0;
  double max_outside = 0.0;
  /// Grid measure of {x in A : F_A(x) < level - tol}.
  double inside_violation = 0.0;
  /// Grid measure of {x not in A, near A : F_A(x) > level + tol}.
  double outside_violation = 0.0;
  std::size_t grid_points = 0;
  bool level_positive = false;
};

/// Samples F_A on a uniform grid over [x_1 - |A|, x_{2n} + |A|] and measures
/// how far A is from being the superlevel set {F_A >= level}.
SuperlevelReport superlevel_check(const IntervalUnion& a, double tol, std::size_t grid_points = 4001);

}  // namespace specon
