#include "specon/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>

#include <boost/math/tools/roots.hpp>

namespace specon {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": non-finite argument");
  }
}

// Standard sine integral Si(z) = int_0^z sin(u)/u du by its Taylor series.
double sine_integral_series(double z, double tol) {
  const double z2 = z * z;
  double power = z;  // z^(2k+1)/(2k+1)!
  double sum = z;
  for (int k = 1; k < 200; ++k) {
    power *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double term = power / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) <= tol * std::max(1e-300, std::abs(sum))) break;
  }
  return sum;
}

// Si(pi x) for x > 0 via the continued fraction of E1(i pi x); the phase
// factor e^{-i pi x} uses exactly reduced trig so large x keeps full accuracy.
double sine_integral_cf(double x, double tol) {
  const double t = kPi * x;
  constexpr double tiny = std::numeric_limits<double>::min() * 1e10;
  std::complex<double> b(1.0, t);
  std::complex<double> c(1.0 / tiny, 0.0);
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  bool converged = false;
  for (int i = 2; i < 10000; ++i) {
    const double a = -static_cast<double>(i - 1) * static_cast<double>(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("si: continued fraction did not converge");
  h *= std::complex<double>(cos_pi(x), -sin_pi(x));
  return 0.5 * kPi + h.imag();
}

}  // namespace

void AccuracySpec::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("AccuracySpec: abs_tol must be positive");
  if (!(series_switch > 0.0)) throw std::invalid_argument("AccuracySpec: series_switch must be positive");
}

double sin_pi(double x) {
  require_finite(x, "sin_pi");
  double r = std::fmod(x, 2.0);
  if (r > 1.0) {
    r -= 2.0;
  } else if (r < -1.0) {
    r += 2.0;
  }
  // r in [-1, 1]; fold to [-1/2, 1/2] using sin(pi r) = sin(pi (1 - r)).
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  require_finite(x, "cos_pi");
  double r = std::abs(std::fmod(x, 2.0));
  if (r > 1.0) r = 2.0 - r;
  double sign = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;
    sign = -1.0;
  }
  // r in [0, 1/2]
  if (r >= 0.25) return sign * std::sin(kPi * (0.5 - r));
  return sign * std::cos(kPi * r);
}

double sinc(double x) {
  require_finite(x, "sinc");
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double u2 = kPi2 * x * x;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return sin_pi(x) / (kPi * x);
}

double si(double x, const AccuracySpec& acc) {
  require_finite(x, "si");
  const double ax = std::abs(x);
  const double tol = std::max(acc.abs_tol * 1e-2, std::numeric_limits<double>::epsilon());
  double value;
  if (ax <= acc.series_switch) {
    value = sine_integral_series(kPi * ax, tol) / kPi;
  } else {
    value = sine_integral_cf(ax, tol) / kPi;
  }
  return x < 0.0 ? -value : value;
}

double phi2(double x, const AccuracySpec& acc) {
  require_finite(x, "phi2");
  const double s = sin_pi(0.5 * x);
  return x * si(x, acc) - 2.0 * s * s / kPi2;
}

double g(double x, const AccuracySpec& acc) {
  require_finite(x, "g");
  if (x < 0.0) throw std::domain_error("g: argument must be non-negative");
  // x int_0^x sinc^2 = x si(2x) - sin^2(pi x)/pi^2
  const double s = sin_pi(x);
  return x * si(2.0 * x, acc) - s * s / kPi2;
}

double s_kernel(double beta) {
  require_finite(beta, "s_kernel");
  const double h = 0.5 * beta;
  if (std::abs(h) < 1e-4) {
    const double h2 = h * h;
    return 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
  }
  return std::sin(h) / h;
}

namespace {

std::pair<double, double> bracket_root(auto f, double lo, double hi) {
  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t iters = 200;
  return boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
}

}  // namespace

SideLobe sinc_side_lobe() {
  // d/dy sinc(y) = 0  <=>  pi y cos(pi y) - sin(pi y) = 0.
  const auto r = bracket_root([](double y) { return kPi * y * cos_pi(y) - sin_pi(y); }, 2.0, 2.5);
  const double x = 0.5 * (r.first + r.second);
  return {x, sinc(x)};
}

double threshold_t0() {
  static const double t0 = [] {
    const double level = sinc_side_lobe().value;
    const auto r = bracket_root([level](double x) { return sinc(x) - level; }, 0.0, 1.0);
    return 0.5 * (r.first + r.second);
  }();
  return t0;
}

}  // namespace specon
