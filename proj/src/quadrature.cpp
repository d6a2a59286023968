#include "specon/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <stdexcept>

#include "specon/specfun.hpp"

namespace specon {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae descending).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
  int depth;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const ScalarFn& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  const double err = std::abs((kronrod - gauss) * half);
  if (!std::isfinite(value)) throw std::domain_error("integrate: integrand returned a non-finite value");
  return {a, b, value, err, abs_sum * std::abs(half), depth};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be positive");
  if (!(rel_tol >= 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be non-negative");
  if (max_depth < 10) throw std::invalid_argument("QuadratureSpec: max_depth must be at least 10");
}

QuadratureResult integrate_partition(const ScalarFn& f, std::span<const double> breakpoints,
                                     const QuadratureSpec& spec) {
  spec.validate();
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] >= breakpoints[i - 1])) throw std::invalid_argument("integrate: breakpoints must be sorted");
  }

  std::priority_queue<Segment> heap;
  QuadratureResult result;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] == breakpoints[i - 1]) continue;
    heap.push(gk15(f, breakpoints[i - 1], breakpoints[i], 0));
    result.evaluations += 15;
  }
  if (heap.empty()) {
    result.converged = true;
    return result;
  }

  auto totals = [&heap]() {
    auto copy = heap;
    double v = 0.0, e = 0.0, av = 0.0;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      av += copy.top().abs_value;
      copy.pop();
    }
    return std::array<double, 3>{v, e, av};
  };

  auto [value, error, abs_value] = totals();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (;;) {
    const double target = std::max({spec.abs_tol, spec.rel_tol * std::abs(value), 50.0 * eps * abs_value});
    if (error <= target) {
      result.converged = true;
      break;
    }
    const Segment worst = heap.top();
    if (worst.depth >= spec.max_depth || heap.size() >= spec.max_intervals) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gk15(f, worst.a, mid, worst.depth + 1);
    const Segment right = gk15(f, mid, worst.b, worst.depth + 1);
    result.evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    abs_value += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    if (heap.size() % 512 == 0) {
      const auto t = totals();
      value = t[0];
      error = t[1];
      abs_value = t[2];
    }
  }
  const auto t = totals();
  result.value = t[0];
  result.error = t[1];
  return result;
}

QuadratureResult integrate(const ScalarFn& f, double a, double b, const QuadratureSpec& spec) {
  const double bp[2] = {a, b};
  return integrate_partition(f, bp, spec);
}

QuadratureResult integrate_oscillatory(const ScalarFn& f, double a, double b, double omega,
                                       const QuadratureSpec& spec) {
  const double span = b - a;
  if (!(omega > 0.0) || span * omega <= 8.0 * kPi) return integrate(f, a, b, spec);
  const double half_period = kPi / omega;
  const auto panels = static_cast<std::size_t>(std::ceil(span / half_period));
  std::vector<double> bp;
  bp.reserve(panels + 1);
  for (std::size_t i = 0; i < panels; ++i) bp.push_back(a + static_cast<double>(i) * half_period);
  bp.push_back(b);
  return integrate_partition(f, bp, spec);
}

QuadratureResult oracle_pair_form(const Interval& i1, const Interval& i2, const QuadratureSpec& spec) {
  QuadratureSpec inner_spec = spec;
  inner_spec.abs_tol = spec.abs_tol * 1e-2;
  inner_spec.rel_tol = spec.rel_tol * 1e-2;
  bool inner_ok = true;
  auto inner = [&](double x) {
    auto r = integrate_oscillatory([x](double y) { return sinc(x - y); }, i2.lo, i2.hi, kPi, inner_spec);
    inner_ok = inner_ok && r.converged;
    return r.value;
  };
  QuadratureResult outer = integrate_oscillatory(inner, i1.lo, i1.hi, kPi, spec);
  outer.converged = outer.converged && inner_ok;
  return outer;
}

QuadratureResult oracle_set_form(const IntervalUnion& a, const IntervalUnion& b, const QuadratureSpec& spec) {
  QuadratureResult total;
  total.converged = true;
  for (const auto& p : a.parts()) {
    for (const auto& q : b.parts()) {
      const auto r = oracle_pair_form(p, q, spec);
      total.value += r.value;
      total.error += r.error;
      total.evaluations += r.evaluations;
      total.converged = total.converged && r.converged;
    }
  }
  return total;
}

QuadratureResult oracle_step_form(const StepFunction& f, const StepFunction& g, const QuadratureSpec& spec) {
  QuadratureResult total;
  total.converged = true;
  for (const auto& p : f.pieces()) {
    for (const auto& q : g.pieces()) {
      if (p.value == 0.0 || q.value == 0.0 || p.interval.length() == 0.0 || q.interval.length() == 0.0) continue;
      const auto r = oracle_pair_form(p.interval, q.interval, spec);
      total.value += p.value * q.value * r.value;
      total.error += p.value * q.value * r.error;
      total.evaluations += r.evaluations;
      total.converged = total.converged && r.converged;
    }
  }
  return total;
}

// ------------------------------------------------------------------ AltPoly

AltPoly::AltPoly(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty() || nodes_.size() % 2 != 0) throw std::invalid_argument("AltPoly: node count must be even");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i])) throw std::invalid_argument("AltPoly: non-finite node");
    if (i > 0 && nodes_[i] < nodes_[i - 1]) throw std::invalid_argument("AltPoly: nodes must be nondecreasing");
  }
}

double AltPoly::pair_gap_total() const {
  double s = 0.0;
  for (std::size_t j = 0; j < nodes_.size(); j += 2) s += nodes_[j + 1] - nodes_[j];
  return s;
}

AltPoly AltPoly::two_term_equivalent() const { return AltPoly({0.0, pair_gap_total()}); }

double poly_sq_over_t2_integrand(const AltPoly& p, double t, bool pi_scaled) {
  // P(t)/t = e^{i w_1 t} sum_j (-1)^j (e^{i d_j t} - 1)/t with d_j = w_j - w_1,
  // and (e^{i d t} - 1)/t = i d sinc_rad(d t / 2) e^{i d t / 2}.
  const auto nodes = p.nodes();
  const double scale = pi_scaled ? kPi : 1.0;
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double d = scale * (nodes[j] - nodes[0]);
    const double half = 0.5 * d * t;
    const double sr = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
    const std::complex<double> term = std::complex<double>(0.0, d * sr) * std::polar(1.0, half);
    // j is 0-based, so the coefficient (-1)^{j+1} is -1 for even j.
    if (j % 2 == 0) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return std::norm(acc);
}

QuadratureResult poly_sq_over_t2(const AltPoly& p, double upper, bool pi_scaled, const QuadratureSpec& spec) {
  if (!(upper > 0.0)) throw std::invalid_argument("poly_sq_over_t2: upper limit must be positive");
  const auto nodes = p.nodes();
  const double omega = (pi_scaled ? kPi : 1.0) * (nodes.back() - nodes.front());
  return integrate_oscillatory([&p, pi_scaled](double t) { return poly_sq_over_t2_integrand(p, t, pi_scaled); }, 0.0,
                               upper, omega, spec);
}

double poly_sq_over_t2_tail(const AltPoly& p, double upper, bool pi_scaled) {
  if (!(upper > 0.0)) throw std::invalid_argument("poly_sq_over_t2_tail: upper limit must be positive");
  const auto nodes = p.nodes();
  const std::size_t m = nodes.size();
  // Diagonal j = k: sum of 1/U.
  double total = static_cast<double>(m) / upper;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      const double delta = nodes[k] - nodes[j];
      // int_U^inf cos(w t)/t^2 dt = cos(w U)/U - |w| (pi/2 - Si(|w| U)), with
      // Si(z) = pi si(z/pi) and w = delta (or pi delta).
      double term;
      if (pi_scaled) {
        const double y = delta * upper;
        term = cos_pi(y) / upper - kPi2 * delta * (0.5 - si(y));
      } else {
        const double y = delta * upper / kPi;
        term = cos_pi(y) / upper - kPi * delta * (0.5 - si(y));
      }
      total += ((j + k) % 2 == 0 ? 2.0 : -2.0) * term;
    }
  }
  return total;
}

double closed_l2_norm(const AltPoly& p) {
  const auto nodes = p.nodes();
  const std::size_t m = nodes.size();
  double off = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      const double s = s_kernel(nodes[k] - nodes[j]);
      off += ((j + k) % 2 == 0) ? s : -s;
    }
  }
  return std::max(0.0, static_cast<double>(m) + 2.0 * off);
}

}  // namespace specon
