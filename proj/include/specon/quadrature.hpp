#pragma once

// Adaptive Gauss-Kronrod quadrature, the weighted integrals
// int |P(t)|^2 / t^2 dt of alternating non-harmonic polynomials with their
// analytic tails, exact L2 norms on [-1/2, 1/2], and brute-force oracles for
// the sinc bilinear form.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "specon/intervals.hpp"

namespace specon {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;
  /// Hard cap on the number of live subintervals.
  std::size_t max_intervals = 200000;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  /// Sum of |K15 - G7| over the final partition.
  double error = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
};

using ScalarFn = std::function<double(double)>;

/// Globally adaptive GK15 on [a, b]; the worst subinterval is bisected until
/// the summed error estimate meets max(abs_tol, rel_tol |I|). Depth or
/// interval exhaustion returns converged = false with the best estimate.
QuadratureResult integrate(const ScalarFn& f, double a, double b, const QuadratureSpec& spec = {});

/// Same, starting from a caller-supplied partition (sorted breakpoints).
QuadratureResult integrate_partition(const ScalarFn& f, std::span<const double> breakpoints,
                                     const QuadratureSpec& spec = {});

/// For integrands oscillating with angular frequency at most `omega`: when
/// (b - a) omega > 8 pi, [a, b] is pre-split at multiples of the half-period
/// pi / omega before adaptive refinement.
QuadratureResult integrate_oscillatory(const ScalarFn& f, double a, double b, double omega,
                                       const QuadratureSpec& spec = {});

/// Iterated adaptive quadrature of int_{I1} int_{I2} sinc(x - y) dy dx.
/// Test oracle for the closed-form bilinear form.
QuadratureResult oracle_pair_form(const Interval& i1, const Interval& i2, const QuadratureSpec& spec = {});

/// Sum of oracle_pair_form over component pairs.
QuadratureResult oracle_set_form(const IntervalUnion& a, const IntervalUnion& b, const QuadratureSpec& spec = {});

/// Sum_{p,q} v_p w_q oracle_pair_form(I_p, I_q).
QuadratureResult oracle_step_form(const StepFunction& f, const StepFunction& g, const QuadratureSpec& spec = {});

/// Frequencies alpha_1 <= ... <= alpha_{2n} of P(t) = sum_j (-1)^j e^{i alpha_j t}.
class AltPoly {
 public:
  AltPoly() = default;
  /// Throws std::invalid_argument unless the count is even, nonzero, finite
  /// and nondecreasing.
  explicit AltPoly(std::vector<double> nodes);

  std::span<const double> nodes() const { return nodes_; }
  std::size_t pairs() const { return nodes_.size() / 2; }
  /// sum_j (alpha_{2j} - alpha_{2j-1}).
  double pair_gap_total() const;
  /// The two-term polynomial 1 - e^{i L t} with L = pair_gap_total().
  AltPoly two_term_equivalent() const;

 private:
  std::vector<double> nodes_;
};

/// |P(t)|^2 / t^2 with the removable singularity filled by
/// (sum_j (-1)^j omega_j)^2. With pi_scaled the frequencies are pi alpha_j.
double poly_sq_over_t2_integrand(const AltPoly& p, double t, bool pi_scaled);

/// int_0^U |P(t)|^2 / t^2 dt by adaptive quadrature.
QuadratureResult poly_sq_over_t2(const AltPoly& p, double upper, bool pi_scaled, const QuadratureSpec& spec = {});

/// int_U^inf |P(t)|^2 / t^2 dt in closed form (sine-integral expansion).
double poly_sq_over_t2_tail(const AltPoly& p, double upper, bool pi_scaled);

/// int_{-1/2}^{1/2} |P(t)|^2 dt = sum_{j,k} (-1)^{j+k} s_kernel(alpha_j - alpha_k).
double closed_l2_norm(const AltPoly& p);

}  // namespace specon
