#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <tuple>

#include "specon/quadrature.hpp"
#include "specon/specfun.hpp"
#include "specon/spectral.hpp"

using namespace specon;

namespace {

GapVector random_gap_vector(std::mt19937_64& rng, std::size_t n, double hi) {
  std::uniform_real_distribution<double> u(0.05, hi);
  std::vector<double> a(2 * n - 1);
  for (double& x : a) x = u(rng);
  return GapVector(a);
}

}  // namespace

TEST_CASE("pair_form against the double-integral oracle") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int trial = 0; trial < 25; ++trial) {
    double p = u(rng), q = u(rng), r = u(rng), s = u(rng);
    if (p > q) std::swap(p, q);
    if (r > s) std::swap(r, s);
    const auto o = oracle_pair_form({p, q}, {r, s});
    CHECK(o.converged);
    CHECK(std::abs(pair_form({p, q}, {r, s}) - o.value) < 1e-9);
  }
}

TEST_CASE("pair_form symmetry, translation invariance and single-interval value") {
  const Interval a{0.3, 1.9}, b{4.0, 6.5};
  CHECK(pair_form(a, b) == doctest::Approx(pair_form(b, a)).epsilon(1e-14));
  CHECK(pair_form(a, b) == doctest::Approx(pair_form({a.lo + 7, a.hi + 7}, {b.lo + 7, b.hi + 7})).epsilon(1e-12));
  // (I, I) for I = [0, T] is 2 phi2(T).
  CHECK(pair_form({0.0, 2.5}, {0.0, 2.5}) == doctest::Approx(2.0 * phi2(2.5)).epsilon(1e-15));
}

TEST_CASE("step_form reduces to set_form for indicators") {
  const IntervalUnion a({0.0, 1.0, 2.5, 4.0});
  const auto f = StepFunction::indicator(a, 3.0);
  CHECK(step_form(f, f) == doctest::Approx(9.0 * set_form(a, a)).epsilon(1e-14));
  const auto o = oracle_step_form(f, f);
  CHECK(std::abs(o.value - step_form(f, f)) < 1e-8);
}

TEST_CASE("concentration: dilation, range and rearrangement") {
  const IntervalUnion a({0.0, 1.0, 3.0, 4.0});
  const auto c2 = concentration(a, 2.0);
  const auto c1 = concentration(dilate(a, 2.0), 1.0);
  CHECK(c2.value == doctest::Approx(c1.value).epsilon(1e-14));
  CHECK(c2.product == 4.0);
  CHECK(c2.value > 0.0);
  CHECK(c2.value < c2.product);
  CHECK(c2.band_energy() == doctest::Approx(c2.value / 2.0));
  CHECK(concentration(rearrange(a)).value > concentration(a).value);
  CHECK_THROWS_AS(concentration(a, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(concentration(a, -1.0), std::invalid_argument);
}

TEST_CASE("band energy equals the Fourier integral over the band") {
  // |chi_A^(xi)|^2 for A = [0,1] u [3,4] integrated over [-1/2, 1/2].
  const IntervalUnion a({0.0, 1.0, 3.0, 4.0});
  auto spectrum = [](double xi) {
    if (xi == 0.0) return 4.0;
    // chi^(xi) = sum_k (e^{-2 pi i xi lo} - e^{-2 pi i xi hi}) / (2 pi i xi).
    const double w = 2.0 * kPi * xi;
    double re = 0.0, im = 0.0;
    for (auto [lo, hi] : {std::pair{0.0, 1.0}, std::pair{3.0, 4.0}}) {
      re += (std::sin(w * hi) - std::sin(w * lo)) / w;
      im += (std::cos(w * hi) - std::cos(w * lo)) / w;
    }
    return re * re + im * im;
  };
  const auto q = integrate(spectrum, -0.5, 0.5, {1e-13, 1e-13});
  CHECK(concentration(a).band_energy() == doctest::Approx(q.value).epsilon(1e-11));
}

TEST_CASE("field F at the endpoints of a single interval") {
  const IntervalUnion i({0.0, 2.7});
  CHECK(f_field(i, 0.0) == doctest::Approx(si(2.7)).epsilon(1e-15));
  CHECK(f_field(i, 2.7) == doctest::Approx(si(2.7)).epsilon(1e-15));
}

TEST_CASE("three forms of H agree") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const GapVector g = random_gap_vector(rng, 2 + trial % 3, 6.0);
    const auto b = h_gap(g);
    CHECK(b.quadrature_converged);
    CHECK(b.max_disagreement() < 1e-9);
  }
}

TEST_CASE("H matches the set-form difference") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const GapVector g = random_gap_vector(rng, 2 + trial % 4, 5.0);
    const IntervalUnion j(endpoints_from_gaps(g));
    const IntervalUnion i({0.0, g.total_length()});
    CHECK(h_value(g) == doctest::Approx(set_form(i, i) - set_form(j, j)).epsilon(1e-11));
  }
}

TEST_CASE("H vanishes on a single interval and with closed holes") {
  CHECK(h_value(GapVector({3.3})) == 0.0);
  CHECK(std::abs(h_value(GapVector({1.0, 0.0, 2.0}))) < 1e-14);
}

TEST_CASE("two-interval H equals 16/pi^2 Phi") {
  for (auto [a, e, b] : {std::tuple{1.0, 2.0, 1.0}, std::tuple{0.3, 4.1, 2.2}, std::tuple{5.0, 0.2, 0.7}}) {
    const auto phi = phi_two_interval(a, b, e, {1e-13, 1e-13});
    CHECK(phi.converged);
    CHECK(16.0 / kPi2 * phi.value == doctest::Approx(h_value(GapVector({a, e, b}))).epsilon(1e-9));
  }
  CHECK_THROWS_AS(phi_two_interval(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("gradient against central differences") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const GapVector g = random_gap_vector(rng, 2 + trial % 3, 4.0);
    const auto grad = grad_h(g);
    for (std::size_t m = 0; m < g.size(); ++m) {
      auto plus = g.vec(), minus = g.vec();
      const double h = 1e-6;
      plus[m] += h;
      minus[m] -= h;
      const double fd = (h_value(GapVector(plus)) - h_value(GapVector(minus))) / (2 * h);
      CHECK(std::abs(grad[m] - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
  CHECK_THROWS_AS(grad_h(GapVector({1.0, 0.0, 1.0})), std::domain_error);
}

TEST_CASE("scale derivative against a difference quotient") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const GapVector g = random_gap_vector(rng, 2 + trial % 3, 4.0);
    const double h = 1e-6;
    const double fd = (h_value(g.scaled(1 + h)) - h_value(g.scaled(1 - h))) / (2 * h);
    CHECK(scale_derivative(g) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("a single interval is the superlevel set of its field") {
  const auto r = superlevel_check(IntervalUnion({0.0, 1.5}), 1e-12);
  CHECK(r.level_positive);
  CHECK(r.inside_violation == 0.0);
  CHECK(r.outside_violation == 0.0);
  CHECK_THROWS_AS(superlevel_check(IntervalUnion({0.0, 1.0}), 1e-12, 1), std::invalid_argument);
}
