#include <doctest.h>

#include <cmath>

#include "specon/bounds.hpp"
#include "specon/json_io.hpp"
#include "specon/specfun.hpp"
#include "specon/spectral.hpp"

using namespace specon;

TEST_CASE("finalize derives passed from the slack") {
  BoundReport r;
  r.worst_slack = -2e-9;
  r.tolerance = 1e-9;
  finalize(r);
  CHECK_FALSE(r.passed);
  r.worst_slack = -5e-10;
  finalize(r);
  CHECK(r.passed);
  r.strict = true;
  r.tolerance = 0.0;
  r.worst_slack = 0.0;
  finalize(r);
  CHECK_FALSE(r.passed);
  r.worst_slack = 1.0;
  SubCheck bad;
  bad.worst_slack = -1.0;
  r.checks = {bad};
  finalize(r);
  CHECK_FALSE(r.passed);
}

TEST_CASE("log-uniform draws stay in range") {
  auto rng = task_rng(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = log_uniform(rng, 1e-2, 30.0);
    CHECK(x >= 1e-2);
    CHECK(x <= 30.0);
  }
  const auto g = random_gaps(rng, 4, 1e-2, 5.0);
  CHECK(g.size() == 7);
}

TEST_CASE("T0") {
  const double t0 = compute_t0();
  CHECK(t0 > 0.883);
  CHECK(t0 < 0.885);
  CHECK(std::abs(sinc(t0) - sinc_side_lobe().value) < 1e-10);
  CHECK(compute_t0() == t0);
  const auto r = verify_t0();
  CHECK(r.passed);
}

TEST_CASE("each verifier passes on a small sample") {
  CHECK(verify_t_identities(200, 7).passed);
  CHECK(verify_wt_threshold(500, 1).passed);
  CHECK(verify_two_interval(0.5, 100, 1).passed);
  CHECK(verify_l2_bounds(500, 1).passed);
  CHECK(verify_iac_and_cor_new(500, 1).passed);
  CHECK(verify_avg_lemma(30, 1).passed);
  CHECK(verify_special_cases(0.5).passed);
}

TEST_CASE("reports are reproducible from name, samples and seed") {
  const auto a = verify_wt_threshold(300, 9);
  const auto b = verify_wt_threshold(300, 9);
  const auto c = verify_wt_threshold(300, 10);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a).dump() != to_json(c).dump());
}

TEST_CASE("separated pairs grow linearly") {
  const double per_pair = 2.0 - 2.0 * s_kernel(1.0);
  for (std::size_t n : {1u, 4u, 12u}) {
    const double norm = closed_l2_norm(AltPoly(separated_pairs_nodes(n, 1.0, 1e3)));
    CHECK(norm == doctest::Approx(n * per_pair).epsilon(0.1));
    CHECK(norm < 54.0 * n - 47.0);
  }
}

TEST_CASE("averaging identity on a hand example") {
  const GapVector g({1.0, 0.5, 2.0});
  CHECK(average_h_quadrature(g) == doctest::Approx(average_h_closed(g)).epsilon(1e-9));
  CHECK(average_h_closed(GapVector({2.0})) == 0.0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(verify_two_interval(0.0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_special_cases(-1.0), std::invalid_argument);
}
