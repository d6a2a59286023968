#pragma once

// Sampled verification of the quantitative bounds on H, on alternating
// non-harmonic polynomials, and of the T-operator identities; computation of
// the critical constant T0.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "specon/intervals.hpp"

namespace specon {

/// One auxiliary inequality or identity checked alongside the main bound.
struct SubCheck {
  std::string name;
  double worst_slack = 0.0;
  double tolerance = 0.0;
  bool strict = false;
  bool passed = false;
};

struct BoundRow {
  std::vector<double> input;
  double slack = 0.0;
};

struct BoundReport {
  std::string name;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Minimum over samples of (bound - value), oriented so that a
  /// nonnegative slack means the inequality holds.
  double worst_slack = 0.0;
  nlohmann::json worst_case;
  double tolerance = 1e-9;
  /// Strict inequality: passing needs worst_slack > -tolerance.
  bool strict = false;
  bool passed = false;
  std::vector<SubCheck> checks;
  /// Inputs that failed, with closed-form and oracle values.
  nlohmann::json violations = nlohmann::json::array();
  /// Sampled (input, slack) rows for export; capped.
  std::vector<BoundRow> rows;
};

/// Sets every `passed` flag from the slacks. The only way a report is marked.
void finalize(BoundReport& r);
void finalize(SubCheck& c);

/// Log-uniform draw on [lo, hi].
double log_uniform(std::mt19937_64& rng, double lo, double hi);
/// Gap vector with n intervals and entries log-uniform on [lo, hi].
GapVector random_gaps(std::mt19937_64& rng, std::size_t n, double lo, double hi);

/// T0 = min{x > 0 : sinc x = max_{y >= 1} sinc y}.
double compute_t0();
/// T0 in (0.883, 0.885), sinc(T0) against the side-lobe height, and
/// tan(pi y*) = pi y* at the side-lobe location.
BoundReport verify_t0();

/// H >= -1e-9 on random gap vectors with n in 2..6 and T <= 4/3.
BoundReport verify_wt_threshold(std::size_t samples, std::uint64_t seed);

/// H > 0 on the (a, eps, b) lattice over (0, 6]^3 with the given step plus
/// `random_points` uniform triples; symmetry of Phi on a subsample.
BoundReport verify_two_interval(double step, std::size_t random_points, std::uint64_t seed);

/// int |sum (-1)^j e^{i alpha_j t}|^2 over [-1/2, 1/2] below
/// min(54n - 47, (pi/2) sum of pair gaps), on random and adversarial nodes.
BoundReport verify_l2_bounds(std::size_t samples, std::uint64_t seed);

/// Nodes of n pairs (k spacing, k spacing + pair_gap), k = 0..n-1.
std::vector<double> separated_pairs_nodes(std::size_t n, double pair_gap, double spacing);

/// -4/pi^2 < H < (54n - 51)/pi^2 on random gap vectors, n <= 8, entries in (0, 30].
BoundReport verify_iac_and_cor_new(std::size_t samples, std::uint64_t seed);

/// int_0^1 H(s a) ds by quadrature against H/2 - (2/pi^2) T({a_j}, (1 - sinc x)/2),
/// and the 27(n - 1)/pi^2 bound.
BoundReport verify_avg_lemma(std::size_t samples, std::uint64_t seed);
/// Left side of the averaging identity by adaptive quadrature over s.
double average_h_quadrature(const GapVector& g, bool* converged = nullptr);
/// Right side of the averaging identity in closed form.
double average_h_closed(const GapVector& g);

/// Even-integer gap vectors from {2, 4, 6} with n <= 4, and the n = 3 lattice
/// with a_2 = a_5 over (0, 4].
BoundReport verify_special_cases(double lattice_step = 0.25);

/// T(c, x) = 0, T(c, x^2) = 0, T_k(c, x) = 0 and T(c, 1) = -(n - 1) exactly in
/// rational arithmetic; floating-point residuals relative to the summed
/// magnitude of the terms.
BoundReport verify_t_identities(std::size_t samples, std::uint64_t seed);

}  // namespace specon
