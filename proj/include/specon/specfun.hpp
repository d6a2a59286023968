#pragma once

// Special functions for the unit-bandwidth sinc kernel.
//
// Everything here uses the pi-normalized convention: sinc(x) = sin(pi x)/(pi x)
// and si(x) = int_0^x sinc(t) dt, so si(+inf) = 1/2.

#include <numbers>

namespace specon {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPi2 = kPi * kPi;

struct AccuracySpec {
  /// Absolute error target for si and the functions built on it.
  double abs_tol = 1e-15;
  /// |x| at which si switches from the power series to the auxiliary-function
  /// (continued fraction) representation.
  double series_switch = 1.0;

  void validate() const;
};

/// sin(pi x) with exact argument reduction; zero at every integer.
double sin_pi(double x);
/// cos(pi x) with exact argument reduction; zero at every half-integer.
double cos_pi(double x);

double sinc(double x);

/// int_0^x sinc(t) dt. Odd, bounded, tends to 1/2.
double si(double x, const AccuracySpec& acc = {});

/// Second antiderivative of sinc: int_0^x si(u) du = x si(x) + (cos(pi x) - 1)/pi^2.
double phi2(double x, const AccuracySpec& acc = {});

/// G(x) = x int_0^x sinc^2 = int_0^x si(2y) dy, defined for x >= 0.
/// Throws std::domain_error for negative x.
double g(double x, const AccuracySpec& acc = {});

/// int_{-1/2}^{1/2} e^{i beta t} dt = 2 sin(beta/2)/beta.
double s_kernel(double beta);

struct SideLobe {
  /// Location of the largest positive side lobe of sinc, in (2, 2.5).
  double x = 0.0;
  double value = 0.0;
};

/// Root of pi y cos(pi y) = sin(pi y) on (2, 2.5).
SideLobe sinc_side_lobe();

/// T0 in (0, 1): the point where sinc falls to the side-lobe height. For
/// T <= T0 the symmetric rearrangement never lowers the concentration.
double threshold_t0();

}  // namespace specon
