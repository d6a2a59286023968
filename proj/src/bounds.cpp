#include "specon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "specon/quadrature.hpp"
#include "specon/search.hpp"
#include "specon/specfun.hpp"
#include "specon/spectral.hpp"
#include "specon/toperator.hpp"

namespace specon {

void finalize(SubCheck& c) {
  c.passed = c.strict ? c.worst_slack > -c.tolerance : c.worst_slack >= -c.tolerance;
}

void finalize(BoundReport& r) {
  bool ok = r.strict ? r.worst_slack > -r.tolerance : r.worst_slack >= -r.tolerance;
  for (auto& c : r.checks) {
    finalize(c);
    ok = ok && c.passed;
  }
  r.passed = ok && std::isfinite(r.worst_slack);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

GapVector random_gaps(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::vector<double> a(2 * n - 1);
  for (double& v : a) v = log_uniform(rng, lo, hi);
  return GapVector(std::move(a));
}

namespace {

constexpr std::size_t kRowCap = 2000;
constexpr std::size_t kViolationCap = 20;

// Distinct streams per verifier so that suites never share samples.
enum Salt : std::uint64_t { kWt = 1, kTwo = 2, kL2 = 3, kIac = 4, kAvg = 5, kIdent = 6 };

std::mt19937_64 sample_rng(Salt salt, std::uint64_t seed, std::uint64_t index) {
  return task_rng(seed * 0x100 + salt, index);
}

// Running minimum of the slack with the input that produced it.
class Tracker {
 public:
  explicit Tracker(BoundReport& r) : r_(r) { r_.worst_slack = std::numeric_limits<double>::infinity(); }

  void observe(const std::vector<double>& input, double slack, nlohmann::json detail = {}) {
    // Adding +0 turns a negative zero into +0.
    slack = std::isnan(slack) ? -std::numeric_limits<double>::infinity() : slack + 0.0;
    ++r_.samples;
    if (r_.rows.size() < kRowCap) r_.rows.push_back({input, slack});
    if (slack < r_.worst_slack) {
      r_.worst_slack = slack;
      r_.worst_case = {{"input", input}, {"slack", slack}};
      if (!detail.is_null()) r_.worst_case["detail"] = std::move(detail);
    }
  }

  bool failing(double slack) const {
    return r_.strict ? !(slack > -r_.tolerance) : !(slack >= -r_.tolerance);
  }

 private:
  BoundReport& r_;
};

void sub_min(SubCheck& c, double slack) {
  slack = std::isnan(slack) ? -std::numeric_limits<double>::infinity() : slack + 0.0;
  c.worst_slack = std::min(c.worst_slack, slack);
}

SubCheck make_check(std::string name, double tolerance, bool strict) {
  SubCheck c;
  c.name = std::move(name);
  c.worst_slack = std::numeric_limits<double>::infinity();
  c.tolerance = tolerance;
  c.strict = strict;
  return c;
}

// A violated theorem is an artifact bug: keep the input with the closed form
// and an independent quadrature value.
void record_h_violation(BoundReport& r, const GapVector& g, double h) {
  if (r.violations.size() >= kViolationCap) return;
  QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-11;
  const auto o = oracle_h(g, spec);
  r.violations.push_back({{"gaps", g.vec()}, {"h_closed", h}, {"h_oracle", o.value}, {"oracle_converged", o.converged}});
}

}  // namespace

// ---------------------------------------------------------------------- T0

double compute_t0() { return threshold_t0(); }

BoundReport verify_t0() {
  BoundReport r;
  r.name = "t0";
  r.strict = true;
  r.tolerance = 0.0;
  Tracker track(r);
  const double t0 = compute_t0();
  const SideLobe lobe = sinc_side_lobe();
  track.observe({t0}, std::min(t0 - 0.883, 0.885 - t0), {{"t0", t0}, {"side_lobe_x", lobe.x}, {"side_lobe", lobe.value}});

  auto level = make_check("sinc_t0_equals_side_lobe", 1e-10, false);
  sub_min(level, -std::abs(sinc(t0) - lobe.value));
  auto tangent = make_check("side_lobe_tangent_condition", 1e-10, false);
  sub_min(tangent, -std::abs(std::tan(kPi * lobe.x) - kPi * lobe.x));
  // max_{y >= 1} sinc y is attained at the side lobe: scan [1, 200].
  auto global = make_check("side_lobe_is_global_max_beyond_1", 1e-15, false);
  for (std::size_t i = 0; i <= 199000; ++i) sub_min(global, lobe.value - sinc(1.0 + 1e-3 * static_cast<double>(i)));
  auto minimal = make_check("t0_is_first_crossing", 0.0, true);
  for (std::size_t i = 0; i < 10000; ++i) {
    const double x = t0 * static_cast<double>(i) / 10000.0;
    sub_min(minimal, sinc(x) - lobe.value);
  }
  r.checks = {level, tangent, global, minimal};
  finalize(r);
  return r;
}

// --------------------------------------------------------------- WT <= 4/3

BoundReport verify_wt_threshold(std::size_t samples, std::uint64_t seed) {
  BoundReport r;
  r.name = "wt_threshold";
  r.seed = seed;
  r.tolerance = 1e-9;
  Tracker track(r);
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(kWt, seed, i);
    const std::size_t n = 2 + rng() % 5;
    const GapVector raw = random_gaps(rng, n, 1e-2, 10.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double target = (4.0 / 3.0) * (1.0 - u(rng));
    const GapVector g = raw.scaled(target / raw.total_length());
    const double h = h_value(g);
    track.observe(g.vec(), h);
    if (track.failing(h)) record_h_violation(r, g, h);
  }

  auto edge = make_check("symmetric_two_interval_at_4_3", 0.0, true);
  for (std::size_t k = 0; k <= 60; ++k) {
    const double hole = std::pow(10.0, -3.0 + 0.1 * static_cast<double>(k));
    sub_min(edge, h_value(GapVector({2.0 / 3.0, hole, 2.0 / 3.0})));
  }
  auto zero = make_check("zero_hole_degenerate", 1e-12, false);
  for (const auto& v : {std::vector<double>{0.5, 0.0, 0.8}, std::vector<double>{0.3, 0.0, 0.4, 0.0, 0.6},
                        std::vector<double>{1.0, 0.0, 0.2, 0.0, 0.1}}) {
    sub_min(zero, -std::abs(h_value(GapVector(v))));
  }
  r.checks = {edge, zero};
  finalize(r);
  return r;
}

// ------------------------------------------------------------ two intervals

BoundReport verify_two_interval(double step, std::size_t random_points, std::uint64_t seed) {
  if (!(step > 0.0 && step <= 6.0)) throw std::invalid_argument("verify_two_interval: step must lie in (0, 6]");
  BoundReport r;
  r.name = "two_interval";
  r.seed = seed;
  r.strict = true;
  r.tolerance = 0.0;
  Tracker track(r);
  auto visit = [&](double a, double eps, double b) {
    const GapVector g({a, eps, b});
    const double h = h_value(g);
    track.observe(g.vec(), h);
    if (track.failing(h)) record_h_violation(r, g, h);
  };
  const auto steps = static_cast<std::size_t>(std::floor(6.0 / step + 1e-9));
  for (std::size_t i = 1; i <= steps; ++i) {
    for (std::size_t j = 1; j <= steps; ++j) {
      for (std::size_t k = 1; k <= steps; ++k) {
        visit(step * static_cast<double>(i), step * static_cast<double>(j), step * static_cast<double>(k));
      }
    }
  }

  auto symmetry = make_check("phi_symmetry", 1e-9, false);
  auto phi_h = make_check("phi_matches_h", 1e-8, false);
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-12;
  const std::size_t phi_samples = std::min<std::size_t>(random_points, 200);
  for (std::size_t i = 0; i < random_points; ++i) {
    auto rng = sample_rng(kTwo, seed, i);
    std::uniform_real_distribution<double> u(0.0, 6.0);
    const double a = 6.0 - u(rng), eps = 6.0 - u(rng), b = 6.0 - u(rng);
    visit(a, eps, b);
    if (i < phi_samples) {
      const auto p1 = phi_two_interval(a, b, eps, spec);
      const auto p2 = phi_two_interval(eps, b, a, spec);
      sub_min(symmetry, -std::abs(p1.value - p2.value));
      sub_min(phi_h, -std::abs(16.0 / kPi2 * p1.value - h_value(GapVector({a, eps, b}))));
    }
  }

  // H decreases to 0 as the hole closes.
  auto row = make_check("small_hole_monotone", 0.0, true);
  for (const auto& ab : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}, std::pair{0.5, 4.0}}) {
    double prev = std::numeric_limits<double>::infinity();
    for (int e = 1; e <= 6; ++e) {
      const double h = h_value(GapVector({ab.first, std::pow(10.0, -e), ab.second}));
      sub_min(row, std::min(h, prev - h));
      prev = h;
    }
  }
  auto twos = make_check("all_twos", 0.0, true);
  sub_min(twos, h_value(GapVector({2.0, 2.0, 2.0})));
  r.checks = {symmetry, phi_h, row, twos};
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------- L2

std::vector<double> separated_pairs_nodes(std::size_t n, double pair_gap, double spacing) {
  std::vector<double> nodes;
  nodes.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    nodes.push_back(spacing * static_cast<double>(k));
    nodes.push_back(spacing * static_cast<double>(k) + pair_gap);
  }
  return nodes;
}

namespace {

double l2_slack(const AltPoly& p) {
  const double n = static_cast<double>(p.pairs());
  const double cap = std::min(54.0 * n - 47.0, 0.5 * kPi * p.pair_gap_total());
  return cap - closed_l2_norm(p);
}

}  // namespace

BoundReport verify_l2_bounds(std::size_t samples, std::uint64_t seed) {
  BoundReport r;
  r.name = "l2";
  r.seed = seed;
  r.strict = true;
  r.tolerance = 0.0;
  Tracker track(r);
  auto visit = [&](std::vector<double> nodes) {
    std::sort(nodes.begin(), nodes.end());
    const AltPoly p(nodes);
    const double slack = l2_slack(p);
    track.observe(nodes, slack, {{"norm", closed_l2_norm(p)}, {"pair_gap_total", p.pair_gap_total()}});
  };

  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(kL2, seed, i);
    const std::size_t n = 1 + rng() % 12;
    std::uniform_real_distribution<double> u(0.0, 200.0);
    std::vector<double> nodes(2 * n);
    for (double& x : nodes) x = u(rng);
    visit(std::move(nodes));
  }

  // Two-term case on a log grid.
  for (int k = -40; k <= 30; ++k) visit({0.0, std::pow(10.0, 0.1 * k)});
  // Clustered nodes and arithmetic progressions.
  for (std::size_t n = 1; n <= 12; ++n) {
    for (double width : {1e-4, 1e-2, 1.0}) {
      std::vector<double> nodes(2 * n);
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        nodes[j] = 50.0 + width * static_cast<double>(j) / static_cast<double>(nodes.size());
      }
      visit(nodes);
    }
    for (double d : {0.5, 1.0, kPi, 2.0 * kPi, 10.0}) {
      std::vector<double> nodes(2 * n);
      for (std::size_t j = 0; j < nodes.size(); ++j) nodes[j] = d * static_cast<double>(j);
      visit(nodes);
    }
  }

  // Widely separated pairs. With the pair gap near the minimizer of the
  // sine kernel each pair contributes about 2.43; with gap 1 only 0.082.
  const double sharp_gap = 8.986818916354;
  auto sharp = make_check("separated_pairs_norm_per_pair_at_least_1", 0.0, false);
  auto linear = make_check("unit_gap_pairs_linear_growth", 0.0, false);
  const double unit_single = closed_l2_norm(AltPoly({0.0, 1.0}));
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto sharp_nodes = separated_pairs_nodes(n, sharp_gap, 1e3);
    const auto unit_nodes = separated_pairs_nodes(n, 1.0, 1e3);
    visit(sharp_nodes);
    visit(unit_nodes);
    sub_min(sharp, closed_l2_norm(AltPoly(sharp_nodes)) / static_cast<double>(n) - 1.0);
    const double ratio = closed_l2_norm(AltPoly(unit_nodes)) / (static_cast<double>(n) * unit_single);
    sub_min(linear, 0.1 - std::abs(ratio - 1.0));
  }
  r.checks = {sharp, linear};
  finalize(r);
  return r;
}

// ------------------------------------------------------ two-sided H bounds

BoundReport verify_iac_and_cor_new(std::size_t samples, std::uint64_t seed) {
  BoundReport r;
  r.name = "iac_cor_new";
  r.seed = seed;
  r.strict = true;
  r.tolerance = 0.0;
  Tracker track(r);
  auto slack_of = [](const GapVector& g, double h) {
    const double n = static_cast<double>(g.intervals());
    return std::min(h + 4.0 / kPi2, (54.0 * n - 51.0) / kPi2 - h);
  };
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(kIac, seed, i);
    const std::size_t n = 1 + rng() % 8;
    const GapVector g = random_gaps(rng, n, 1e-2, 30.0);
    const double h = h_value(g);
    const double slack = slack_of(g, h);
    track.observe(g.vec(), slack, {{"h", h}});
    if (track.failing(slack)) record_h_violation(r, g, h);
  }
  auto single = make_check("single_interval_zero", 1e-15, false);
  for (double t : {1e-3, 0.5, 1.0, 7.0, 30.0}) sub_min(single, -std::abs(h_value(GapVector({t}))));
  auto ray = make_check("wide_hole_ray_inside_bounds", 0.0, true);
  for (int k = 0; k <= 40; ++k) {
    const GapVector g({1.0, std::pow(10.0, 1.0 + 0.1 * k), 1.0});
    const double h = h_value(g);
    sub_min(ray, std::min(h, slack_of(g, h)));
  }
  r.checks = {single, ray};
  finalize(r);
  return r;
}

// ------------------------------------------------------------- averaging

double average_h_quadrature(const GapVector& g, bool* converged) {
  QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-11;
  auto integrand = [&g](double s) { return s == 0.0 ? 0.0 : h_value(g.scaled(s)); };
  const double span = std::accumulate(g.vec().begin(), g.vec().end(), 0.0);
  const auto q = integrate_oscillatory(integrand, 0.0, 1.0, kPi * span, spec);
  if (converged) *converged = q.converged;
  return q.value;
}

double average_h_closed(const GapVector& g) {
  const double t = t_apply(g.values(), [](double x) { return 0.5 * (1.0 - sinc(x)); });
  return 0.5 * h_value(g) - 2.0 / kPi2 * t;
}

BoundReport verify_avg_lemma(std::size_t samples, std::uint64_t seed) {
  BoundReport r;
  r.name = "avg_lemma";
  r.seed = seed;
  r.strict = true;
  r.tolerance = 0.0;
  Tracker track(r);
  auto identity = make_check("averaging_identity", 1e-6, false);
  auto quadrature = make_check("quadrature_converged", 0.0, false);
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(kAvg, seed, i);
    const std::size_t n = 2 + rng() % 3;
    const GapVector g = random_gaps(rng, n, 1e-2, 10.0);
    bool ok = true;
    const double lhs = average_h_quadrature(g, &ok);
    const double rhs = average_h_closed(g);
    const double bound = 27.0 * static_cast<double>(n - 1) / kPi2;
    track.observe(g.vec(), bound - lhs, {{"quadrature", lhs}, {"closed", rhs}});
    sub_min(identity, -std::abs(lhs - rhs));
    sub_min(quadrature, ok ? 0.0 : -1.0);
  }
  auto single = make_check("single_interval_both_zero", 1e-12, false);
  for (double t : {0.3, 2.0, 9.0}) {
    const GapVector g({t});
    sub_min(single, -std::max(std::abs(average_h_quadrature(g)), std::abs(average_h_closed(g))));
  }
  r.checks = {identity, quadrature, single};
  finalize(r);
  return r;
}

// --------------------------------------------------------- special cases

BoundReport verify_special_cases(double lattice_step) {
  if (!(lattice_step > 0.0 && lattice_step <= 4.0)) {
    throw std::invalid_argument("verify_special_cases: lattice step must lie in (0, 4]");
  }
  BoundReport r;
  r.name = "special_cases";
  r.strict = true;
  r.tolerance = 0.0;
  Tracker track(r);
  auto visit = [&](const std::vector<double>& a) {
    const GapVector g(a);
    const double h = h_value(g);
    track.observe(a, h);
    if (track.failing(h)) record_h_violation(r, g, h);
  };
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::size_t dim = 2 * n - 1;
    std::vector<std::size_t> idx(dim, 0);
    for (;;) {
      std::vector<double> a(dim);
      for (std::size_t i = 0; i < dim; ++i) a[i] = 2.0 * static_cast<double>(idx[i] + 1);
      visit(a);
      std::size_t k = 0;
      while (k < dim && ++idx[k] == 3) idx[k++] = 0;
      if (k == dim) break;
    }
  }
  const auto steps = static_cast<std::size_t>(std::floor(4.0 / lattice_step + 1e-9));
  auto level = [&](std::size_t i) { return lattice_step * static_cast<double>(i + 1); };
  for (std::size_t i1 = 0; i1 < steps; ++i1) {
    for (std::size_t i2 = 0; i2 < steps; ++i2) {
      for (std::size_t i3 = 0; i3 < steps; ++i3) {
        for (std::size_t i4 = 0; i4 < steps; ++i4) {
          visit({level(i1), level(i2), level(i3), level(i4), level(i2)});
        }
      }
    }
  }
  auto named = make_check("named_even_vectors", 0.0, true);
  sub_min(named, h_value(GapVector({2.0, 2.0, 2.0})));
  sub_min(named, h_value(GapVector({2.0, 4.0, 6.0, 2.0, 4.0})));
  r.checks = {named};
  finalize(r);
  return r;
}

// ------------------------------------------------------ T-operator identities

BoundReport verify_t_identities(std::size_t samples, std::uint64_t seed) {
  using Rat = boost::multiprecision::cpp_rational;
  BoundReport r;
  r.name = "t_identities";
  r.seed = seed;
  r.tolerance = 0.0;
  Tracker track(r);
  auto fp = make_check("floating_point_relative_residual", 1e-12, false);
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(kIdent, seed, i);
    const std::size_t n = 1 + rng() % 6;
    const std::size_t len = 2 * n - 1;
    std::vector<Rat> c(len);
    std::vector<double> cd(len);
    for (std::size_t j = 0; j < len; ++j) {
      const auto num = static_cast<long long>(1 + rng() % 1000);
      const auto den = static_cast<long long>(1 + rng() % 100);
      c[j] = Rat(num, den);
      cd[j] = static_cast<double>(num) / static_cast<double>(den);
    }
    const std::span<const Rat> cs(c);
    std::size_t bad = 0;
    if (t_apply(cs, [](const Rat& x) -> Rat { return x; }) != 0) ++bad;
    if (t_apply(cs, [](const Rat& x) -> Rat { return x * x; }) != 0) ++bad;
    if (t_apply(cs, [](const Rat&) -> Rat { return Rat(1); }) != Rat(-static_cast<long long>(n - 1))) ++bad;
    for (std::size_t k = 1; k <= len; ++k) {
      if (t_k_apply(cs, k, [](const Rat& x) -> Rat { return x; }) != 0) ++bad;
    }
    track.observe(cd, -static_cast<double>(bad));

    const std::span<const double> ds(cd);
    double mag1 = 0.0, mag2 = 0.0;
    for (const auto& term : t_terms(ds)) {
      mag1 += std::abs(term.argument);
      mag2 += term.argument * term.argument;
    }
    sub_min(fp, -std::abs(t_apply(ds, [](double x) { return x; })) / mag1);
    sub_min(fp, -std::abs(t_apply(ds, [](double x) { return x * x; })) / mag2);
    sub_min(fp, -std::abs(t_apply_prefix(ds, [](double x) { return x * x; })) / mag2);
    for (std::size_t k = 1; k <= len; ++k) {
      sub_min(fp, -std::abs(t_k_apply(ds, k, [](double x) { return x; })) / mag1);
    }
  }
  r.checks = {fp};
  finalize(r);
  return r;
}

}  // namespace specon
