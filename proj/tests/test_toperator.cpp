#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "specon/specfun.hpp"
#include "specon/toperator.hpp"

using namespace specon;
using Rat = boost::multiprecision::cpp_rational;

namespace {

std::vector<Rat> random_rationals(std::mt19937_64& rng, std::size_t len) {
  std::vector<Rat> c(len);
  for (auto& x : c) x = Rat(static_cast<long long>(1 + rng() % 500), static_cast<long long>(1 + rng() % 60));
  return c;
}

}  // namespace

TEST_CASE("term count and enumeration order") {
  for (std::size_t len : {1u, 3u, 5u, 11u}) {
    const std::vector<double> c(len, 1.0);
    const auto terms = t_terms(std::span<const double>(c));
    CHECK(terms.size() == t_term_count(len));
    CHECK(terms.back().alternating_total);
    CHECK(terms.front().sign == -1);
  }
  const std::vector<double> even(4, 1.0);
  CHECK_THROWS_AS(t_apply(std::span<const double>(even), [](double x) { return x; }), std::invalid_argument);
}

TEST_CASE("hand-computed T for three entries") {
  // -(phi(a)+phi(b)+phi(c)) + phi(a+b) + phi(b+c) - phi(a+b+c) + phi(a+c)
  const std::vector<double> c = {1.0, 2.0, 4.0};
  auto phi = [](double x) { return x * x * x; };
  const double expected = -(1.0 + 8.0 + 64.0) + 27.0 + 216.0 - 343.0 + 125.0;
  CHECK(t_apply(std::span<const double>(c), phi) == expected);
  CHECK(t_apply_prefix(std::span<const double>(c), phi) == expected);
}

TEST_CASE("linear and quadratic test functions vanish exactly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto c = random_rationals(rng, 2 * n - 1);
    const std::span<const Rat> s(c);
    CHECK(t_apply(s, [](const Rat& x) -> Rat { return x; }) == 0);
    CHECK(t_apply(s, [](const Rat& x) -> Rat { return x * x; }) == 0);
    CHECK(t_apply_prefix(s, [](const Rat& x) -> Rat { return x * x; }) == 0);
    CHECK(t_apply(s, [](const Rat&) -> Rat { return Rat(1); }) == Rat(-static_cast<long long>(n - 1)));
    for (std::size_t k = 1; k <= c.size(); ++k) CHECK(t_k_apply(s, k, [](const Rat& x) -> Rat { return x; }) == 0);
  }
}

TEST_CASE("cubic test function does not vanish") {
  const std::vector<Rat> c = {Rat(1), Rat(1), Rat(1)};
  CHECK(t_apply(std::span<const Rat>(c), [](const Rat& x) -> Rat { return x * x * x; }) != 0);
}

TEST_CASE("prefix-sum form equals block enumeration") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 7.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(2 * (1 + trial % 7) - 1);
    for (double& x : c) x = u(rng);
    const std::span<const double> s(c);
    auto phi = [](double x) { return g(0.5 * x); };
    const double a = t_apply(s, phi);
    const double b = t_apply_prefix(s, phi);
    CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)) + 1e-12);
  }
}

TEST_CASE("T_k collects exactly the terms containing c_k") {
  const std::vector<double> c = {1.0, 2.0, 3.0, 4.0, 5.0};
  const std::span<const double> s(c);
  auto phi = [](double x) { return std::exp(0.1 * x); };
  // Terms not involving c_1: blocks starting at index >= 2.
  double without_first = 0.0;
  for (const auto& t : t_terms(s)) {
    if (!t.involves(0)) without_first += t.sign * phi(t.argument);
  }
  CHECK(t_k_apply(s, 1, phi) + without_first == doctest::Approx(t_apply(s, phi)).epsilon(1e-14));
  CHECK_THROWS_AS(t_k_apply(s, 0, phi), std::out_of_range);
  CHECK_THROWS_AS(t_k_apply(s, 6, phi), std::out_of_range);
}
