#include "specon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "specon/specfun.hpp"
#include "specon/toperator.hpp"

namespace specon {

double pair_form(const Interval& i1, const Interval& i2) {
  const double p = i1.lo, q = i1.hi, r = i2.lo, s = i2.hi;
  return phi2(s - p) - phi2(s - q) - phi2(r - p) + phi2(r - q);
}

double set_form(const IntervalUnion& a, const IntervalUnion& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.components(); ++i) {
    for (std::size_t j = 0; j < b.components(); ++j) total += pair_form(a.component(i), b.component(j));
  }
  return total;
}

double step_form(const StepFunction& f, const StepFunction& g) {
  double total = 0.0;
  for (const auto& p : f.pieces()) {
    for (const auto& q : g.pieces()) {
      if (p.value == 0.0 || q.value == 0.0) continue;
      total += p.value * q.value * pair_form(p.interval, q.interval);
    }
  }
  return total;
}

ConcentrationResult concentration(const IntervalUnion& a, double bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw std::invalid_argument("concentration: bandwidth must be positive");
  }
  const IntervalUnion scaled = dilate(a, bandwidth);
  return {set_form(scaled, scaled), bandwidth, scaled.measure()};
}

double f_field(std::span<const double> endpoints, double x) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < endpoints.size(); k += 2) {
    total += si(x - endpoints[k]) - si(x - endpoints[k + 1]);
  }
  return total;
}

double f_field(const IntervalUnion& a, double x) { return f_field(a.endpoints(), x); }

// --------------------------------------------------------------------- H

double HBreakdown::max_disagreement() const {
  return std::max(std::abs(form_a - form_b), std::abs(form_c - form_b));
}

namespace {

double g_half(double x) { return g(0.5 * x); }

// 1 - cos(pi x) without cancellation.
double one_minus_cos_pi(double x) {
  const double s = sin_pi(0.5 * x);
  return 2.0 * s * s;
}

}  // namespace

double h_value(const GapVector& g) { return 4.0 * t_apply(g.values(), g_half); }

HBreakdown h_gap(const GapVector& g, const QuadratureSpec& spec) {
  HBreakdown out;
  out.form_b = h_value(g);
  out.h_value = out.form_b;

  const auto gaps = g.values();
  const double span = std::accumulate(gaps.begin(), gaps.end(), 0.0);
  const double omega = kPi * span;

  auto integrand_a = [gaps](double t) {
    if (t == 0.0) return 0.0;
    const double v = t_apply_prefix(gaps, [t](double x) { return one_minus_cos_pi(x * t); });
    return v / (t * t);
  };
  const auto ra = integrate_oscillatory(integrand_a, 0.0, 1.0, omega, spec);
  out.form_a = 2.0 / kPi2 * ra.value;
  out.form_a_error = 2.0 / kPi2 * ra.error;

  const AltPoly nodes(endpoints_from_gaps(g));
  const auto head_j = poly_sq_over_t2(nodes, 1.0, true, spec);
  const auto head_i = poly_sq_over_t2(nodes.two_term_equivalent(), 1.0, true, spec);
  out.form_c = (head_i.value - head_j.value) / kPi2;
  out.form_c_error = (head_i.error + head_j.error) / kPi2;

  out.quadrature_converged = ra.converged && head_j.converged && head_i.converged;
  return out;
}

QuadratureResult phi_two_interval(double a, double b, double eps, const QuadratureSpec& spec) {
  if (!(a >= 0.0 && b >= 0.0 && eps >= 0.0)) {
    throw std::invalid_argument("phi_two_interval: arguments must be non-negative");
  }
  const double total = a + b + eps;
  auto integrand = [=](double t) {
    if (t == 0.0) return 0.0;
    const double h = 0.5 * t;
    return sin_pi(a * h) * sin_pi(b * h) * sin_pi(eps * h) * sin_pi(total * h) / (t * t);
  };
  return integrate_oscillatory(integrand, 0.0, 1.0, kPi * total, spec);
}

std::vector<double> grad_h(const GapVector& g) {
  if (!g.interior()) throw std::domain_error("grad_h: undefined on the boundary (some gap is zero)");
  const std::vector<double> x = endpoints_from_gaps(g);
  const std::size_t m = g.size();
  std::vector<double> field(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) field[j] = f_field(x, x[j]);

  // suffix[m] = sum_{j >= m+1} (-1)^{j+1} F(x_j) over 0-based j, i.e. the
  // 1-based sum_{j >= m+2} (-1)^j F_J(x_j).
  std::vector<double> suffix(x.size() + 1, 0.0);
  for (std::size_t j = x.size(); j-- > 0;) {
    suffix[j] = suffix[j + 1] + ((j % 2 == 1) ? field[j] : -field[j]);
  }
  const double si_total = si(g.total_length());
  std::vector<double> grad(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double length_term = (k % 2 == 0) ? 2.0 * si_total : 0.0;
    grad[k] = length_term - 2.0 * suffix[k + 1];
  }
  return grad;
}

double scale_derivative(const GapVector& g) {
  return h_value(g) + 2.0 / kPi2 * t_apply(g.values(), one_minus_cos_pi);
}

SuperlevelReport superlevel_check(const IntervalUnion& a, double tol, std::size_t grid_points) {
  if (grid_points < 2) throw std::invalid_argument("superlevel_check: need at least two grid points");
  SuperlevelReport report;
  const auto e = a.endpoints();
  report.level = f_field(a, e[0]);
  for (double x : e) report.level = std::min(report.level, f_field(a, x));
  report.level_positive = report.level > 0.0;

  const double margin = a.measure();
  const double lo = e.front() - margin;
  const double hi = e.back() + margin;
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  report.grid_points = grid_points;
  report.min_inside = std::numeric_limits<double>::infinity();
  report.max_outside = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double f = f_field(a, x);
    if (a.contains(x)) {
      report.min_inside = std::min(report.min_inside, f);
      if (f < report.level - tol) report.inside_violation += step;
    } else {
      report.max_outside = std::max(report.max_outside, f);
      if (f > report.level + tol) report.outside_violation += step;
    }
  }
  return report;
}

}  // namespace specon
