#pragma once

// Minimization of H over positive gap vectors, counterexample scans, the
// local-minimum certificate, and the two-valued step-function construction
// that breaks the rearrangement inequality above T0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "specon/intervals.hpp"
#include "specon/quadrature.hpp"
#include "specon/spectral.hpp"

namespace specon {

/// Independent, reproducible stream for task `index` of a run seeded with `seed`.
std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t index);

// ------------------------------------------------------------- certificate

struct Certificate {
  /// max_j |F_J(x_j) - si(T)|.
  double stationarity_residual = 0.0;
  /// For j = 1..2n: sum_{s=1}^{2n} (-1)^{s-j} sinc(x_s - x_j) - (1 - sinc T).
  /// Nonnegative at a local minimum.
  std::vector<double> second_order_residuals;
  /// int_0^1 |sum (-1)^j e^{i pi x_j t}|^2 dt - (2n - 2(n-1) sinc T).
  double impo_slack = 0.0;
  /// |int_0^1 |P|^2 - (2n + 2 T({a_j}, sinc) - 2 sinc T)|: the exact relation
  /// between the second-order sum and the polynomial integral.
  double impo_identity_residual = 0.0;
  /// |d/ds H(s a)| at s = 1.
  double scale_residual = 0.0;
  double h_value = 0.0;
  /// |H - (1/pi^2)|sum (-1)^j e^{i pi x_j}|^2 + (1/pi^2)|1 - e^{i pi T}|^2|;
  /// small exactly at scale-stationary points.
  double boundary_form_identity_residual = 0.0;
  /// (2 - 2 cos pi T) - |sum (-1)^j e^{i pi x_j}|^2. Nonnegative at
  /// non-positive scale-stationary points; equals -pi^2 H at any
  /// scale-stationary point.
  double chain_inequality_slack = 0.0;
  /// max_m |dH/da_m|.
  double gradient_norm = 0.0;
  /// Endpoint indexing used for the second-order sums.
  std::string index_convention = "s=1..2n (written s=0..2n-1 in the source derivation)";

  double min_second_order_slack() const;
};

struct CertificateTolerances {
  double stationarity = 1e-6;
  double second_order = 1e-8;
  double impo = 1e-8;
  double scale = 1e-6;
  double chain = 1e-8;
};

struct CertificateVerdict {
  bool stationary = false;
  bool second_order = false;
  bool impo = false;
  bool scale = false;
  bool chain = false;

  bool all() const { return stationary && second_order && impo && scale && chain; }
};

CertificateVerdict judge(const Certificate& c, const CertificateTolerances& tol = {});

/// Fills every certificate field at g. Throws std::domain_error when some
/// gap is zero.
Certificate certificate_check(const GapVector& g);

// ---------------------------------------------------------------- minimize

struct SearchConfig {
  std::size_t n = 2;
  double gap_lo = 1e-3;
  double gap_hi = 5.0;
  /// Optional cap on the total length sum of a_{2j-1}.
  std::optional<double> t_max;
  std::size_t restarts = 16;
  std::uint64_t rng_seed = 0;
  double step_tol = 1e-8;
  double value_tol = 1e-12;
  std::size_t max_iters = 5000;
  /// Redraw start points that cannot be non-positive local minima.
  bool scaling_filter = true;

  void validate() const;
};

/// 2n - 2(n-1) sinc T < pi^2 T (with the smaller of the two admissible
/// right-hand sides). Failing points cannot be non-positive local minima.
bool passes_scaling_filter(const GapVector& g);

struct RestartOutcome {
  std::size_t index = 0;
  GapVector start;
  GapVector gaps;
  double h = 0.0;
  /// Projected-gradient infinity norm at the returned point.
  double projected_gradient = 0.0;
  std::size_t simplex_iterations = 0;
  std::size_t gradient_iterations = 0;
  bool converged = false;
  /// No coordinate sits on a bound (and the length cap is inactive).
  bool interior = false;
};

struct MinimizeResult {
  GapVector best;
  HBreakdown breakdown;
  std::optional<Certificate> certificate;
  std::size_t best_restart = 0;
  std::vector<RestartOutcome> restarts;
};

/// Multi-start: random start, Nelder-Mead simplex to rough convergence, then
/// projected gradient descent with analytic gradients. Deterministic in
/// rng_seed.
MinimizeResult minimize_h(const SearchConfig& cfg);

/// Projection onto the feasible box (and length cap).
std::vector<double> project_gaps(const std::vector<double>& a, const SearchConfig& cfg);

// -------------------------------------------------------------------- scan

enum class ScanFamily {
  generic,
  /// n = 3 with a_2 = a_5 (first hole equals last length).
  equal_hole_and_last_length,
  /// Every entry an even integer 2, 4, ..., up to even_max.
  even_integers,
};

struct ScanConfig {
  std::size_t n = 2;
  double t_max = 6.0;
  double hole_max = 6.0;
  /// Lattice points per coordinate; the lattice is used when grid^(2n-1)
  /// stays under lattice_cap.
  std::size_t grid = 8;
  std::size_t lattice_cap = 200000;
  std::size_t quasi_random = 20000;
  std::uint64_t seed = 0;
  ScanFamily family = ScanFamily::generic;
  double even_max = 8.0;
  double violation_threshold = -1e-9;
  /// Cap on rows kept for CSV export.
  std::size_t keep_rows = 5000;

  void validate() const;
};

struct ScanViolation {
  GapVector gaps;
  double h_closed = 0.0;
  double h_oracle = 0.0;
  bool confirmed = false;
};

struct ScanRow {
  GapVector gaps;
  double h = 0.0;
};

struct ScanReport {
  std::size_t evaluated = 0;
  double min_h = 0.0;
  GapVector argmin;
  std::size_t negative_count = 0;
  /// Only oracle-confirmed violations.
  std::vector<ScanViolation> violations;
  /// Closed-form hits the oracle did not confirm.
  std::vector<ScanViolation> rejected;
  std::vector<ScanRow> rows;
};

ScanReport counterexample_scan(const ScanConfig& cfg);

/// H from the double-integral oracle: oracle (I,I) - oracle (J,J).
QuadratureResult oracle_h(const GapVector& g, const QuadratureSpec& spec = {});

// ----------------------------------------------------------------- remark1

struct Remark1Config {
  double total = 1.2;
  std::vector<double> eps_grid = {1e-3, 3e-3, 1e-2};
  std::vector<double> m_grid = {1e1, 1e2, 1e3, 1e4, 1e5};
  /// K = [c, c + total - T0] for c on a uniform grid over (1, 10].
  std::size_t c_steps = 90;
};

struct Remark1Row {
  double eps = 0.0;
  double m = 0.0;
  double k_start = 0.0;
  double margin = 0.0;
};

struct Remark1Result {
  double t0 = 0.0;
  bool found = false;
  double margin = 0.0;
  double oracle_margin = 0.0;
  bool confirmed = false;
  double eps = 0.0;
  double m = 0.0;
  double k_start = 0.0;
  /// w = int_K sinc - int_{T0}^{T} sinc.
  double w = 0.0;
  /// C = (chi_(0,T0), chi_K - chi_(T0,T)).
  double c_term = 0.0;
  StepFunction f;
  StepFunction f_star;
  std::size_t candidates = 0;
  /// Every evaluated candidate, in grid order.
  std::vector<Remark1Row> rows;
};

/// The f = M chi_(0,eps) + chi_(eps,T0) + chi_K family; margin is
/// (f,f) - (f*,f*). A non-positive best margin is a valid outcome.
Remark1Result remark1_search(const Remark1Config& cfg);

/// Margin for one candidate, built from step_form.
double remark1_margin(double total, double t0, double eps, double m, double k_start);

}  // namespace specon
