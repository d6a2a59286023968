#include "specon/search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include "specon/specfun.hpp"
#include "specon/toperator.hpp"

namespace specon {

std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of the pair, so neighbouring tasks get unrelated streams.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return std::mt19937_64(mix(mix(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1)));
}

// ------------------------------------------------------------- certificate

double Certificate::min_second_order_slack() const {
  if (second_order_residuals.empty()) return 0.0;
  return *std::min_element(second_order_residuals.begin(), second_order_residuals.end());
}

CertificateVerdict judge(const Certificate& c, const CertificateTolerances& tol) {
  CertificateVerdict v;
  v.stationary = c.stationarity_residual < tol.stationarity;
  v.second_order = c.min_second_order_slack() >= -tol.second_order;
  v.impo = c.impo_slack >= -tol.impo;
  v.scale = c.scale_residual < tol.scale;
  v.chain = c.chain_inequality_slack >= -tol.chain;
  return v;
}

Certificate certificate_check(const GapVector& g) {
  if (!g.interior()) throw std::domain_error("certificate_check: some gap is zero");
  Certificate c;
  const std::vector<double> x = endpoints_from_gaps(g);
  const std::size_t m = x.size();
  const double n = static_cast<double>(g.intervals());
  const double total = g.total_length();
  const double si_t = si(total);
  const double sinc_t = sinc(total);

  for (double xj : x) c.stationarity_residual = std::max(c.stationarity_residual, std::abs(f_field(x, xj) - si_t));

  // The sign (-1)^{s-j} depends only on the parity of s - j, so 0-based
  // indices give the same sums.
  c.second_order_residuals.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    double sum = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
      const double k = sinc(x[s] - x[j]);
      sum += ((s + j) % 2 == 0) ? k : -k;
    }
    c.second_order_residuals[j] = sum - (1.0 - sinc_t);
  }

  // int_0^1 |P|^2 = sum_{j,k} (-1)^{j+k} sinc(x_j - x_k).
  double poly_l2 = static_cast<double>(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      const double s = 2.0 * sinc(x[k] - x[j]);
      poly_l2 += ((j + k) % 2 == 0) ? s : -s;
    }
  }
  c.impo_slack = poly_l2 - (2.0 * n - 2.0 * (n - 1.0) * sinc_t);
  const double t_sinc = t_apply(g.values(), [](double y) { return sinc(y); });
  c.impo_identity_residual = std::abs(poly_l2 - (2.0 * n + 2.0 * t_sinc - 2.0 * sinc_t));

  c.scale_residual = std::abs(scale_derivative(g));
  c.h_value = h_value(g);

  std::complex<double> p1(0.0, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const std::complex<double> e(cos_pi(x[j]), sin_pi(x[j]));
    // 1-based sign (-1)^j is -1 for the first endpoint.
    if (j % 2 == 0) {
      p1 -= e;
    } else {
      p1 += e;
    }
  }
  const double p1_sq = std::norm(p1);
  const double two_term = 2.0 - 2.0 * cos_pi(total);
  c.boundary_form_identity_residual = std::abs(c.h_value - (p1_sq - two_term) / kPi2);
  c.chain_inequality_slack = two_term - p1_sq;

  const auto grad = grad_h(g);
  for (double v : grad) c.gradient_norm = std::max(c.gradient_norm, std::abs(v));
  return c;
}

// ---------------------------------------------------------------- minimize

void SearchConfig::validate() const {
  if (n < 2) throw std::invalid_argument("SearchConfig: n must be at least 2");
  if (!(gap_lo > 0.0) || !(gap_hi > gap_lo) || !std::isfinite(gap_hi)) {
    throw std::invalid_argument("SearchConfig: need 0 < gap_lo < gap_hi < inf");
  }
  if (t_max && !(*t_max >= static_cast<double>(n) * gap_lo)) {
    throw std::invalid_argument("SearchConfig: t_max is below n * gap_lo");
  }
  if (restarts < 1) throw std::invalid_argument("SearchConfig: restarts must be at least 1");
  if (!(step_tol > 0.0) || !(value_tol > 0.0)) throw std::invalid_argument("SearchConfig: tolerances must be positive");
  if (max_iters < 1) throw std::invalid_argument("SearchConfig: max_iters must be at least 1");
}

bool passes_scaling_filter(const GapVector& g) {
  const double n = static_cast<double>(g.intervals());
  const double total = g.total_length();
  const double sinc_t = sinc(total);
  const double lhs = std::min(2.0 * n - 2.0 * (n - 1.0) * sinc_t, 2.0 * n - 2.0 * n * sinc_t);
  return lhs < kPi2 * total;
}

std::vector<double> project_gaps(const std::vector<double>& a, const SearchConfig& cfg) {
  std::vector<double> out(a.size());
  auto clamp_shifted = [&](double lambda) {
    double len = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double shift = (i % 2 == 0) ? lambda : 0.0;
      out[i] = std::clamp(a[i] - shift, cfg.gap_lo, cfg.gap_hi);
      if (i % 2 == 0) len += out[i];
    }
    return len;
  };
  const double len = clamp_shifted(0.0);
  if (!cfg.t_max || len <= *cfg.t_max) return out;

  // Euclidean projection onto box and {sum of lengths <= t_max}: shift the
  // lengths by the multiplier that makes the cap active.
  double lo = 0.0, hi = 1.0;
  while (clamp_shifted(hi) > *cfg.t_max) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (clamp_shifted(mid) > *cfg.t_max) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  clamp_shifted(hi);
  return out;
}

namespace {

double inf_norm(const std::vector<double>& v) {
  double r = 0.0;
  for (double e : v) r = std::max(r, std::abs(e));
  return r;
}

double projected_gradient(const std::vector<double>& x, const std::vector<double>& grad, const SearchConfig& cfg) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - grad[i];
  const auto p = project_gaps(y, cfg);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(x[i] - p[i]));
  return r;
}

bool is_interior(const std::vector<double>& x, const SearchConfig& cfg) {
  const double margin = 1e-9 * std::max(1.0, cfg.gap_hi);
  double len = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= cfg.gap_lo + margin || x[i] >= cfg.gap_hi - margin) return false;
    if (i % 2 == 0) len += x[i];
  }
  return !cfg.t_max || len < *cfg.t_max - margin;
}

struct SimplexContext {
  const SearchConfig* cfg;
};

double simplex_objective(const gsl_vector* v, void* params) {
  const auto* ctx = static_cast<const SimplexContext*>(params);
  std::vector<double> a(v->size);
  for (std::size_t i = 0; i < v->size; ++i) a[i] = gsl_vector_get(v, i);
  const auto p = project_gaps(a, *ctx->cfg);
  double penalty = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) penalty += (a[i] - p[i]) * (a[i] - p[i]);
  return h_value(GapVector(p)) + 1e3 * penalty;
}

std::vector<double> run_simplex(const std::vector<double>& start, const SearchConfig& cfg, std::size_t& iters) {
  const std::size_t dim = start.size();
  SimplexContext ctx{&cfg};
  gsl_multimin_function fn{&simplex_objective, dim, &ctx};
  gsl_vector* x = gsl_vector_alloc(dim);
  gsl_vector* step = gsl_vector_alloc(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    gsl_vector_set(x, i, start[i]);
    gsl_vector_set(step, i, 0.1 * (cfg.gap_hi - cfg.gap_lo));
  }
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
  gsl_multimin_fminimizer_set(s, &fn, x, step);
  const std::size_t cap = std::min<std::size_t>(cfg.max_iters, 400 * dim);
  iters = 0;
  while (iters < cap) {
    ++iters;
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-4) == GSL_SUCCESS) break;
  }
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = gsl_vector_get(s->x, i);
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return project_gaps(out, cfg);
}

// Projected gradient descent with Barzilai-Borwein steps and an Armijo
// backtrack along the projection arc.
std::vector<double> run_gradient(std::vector<double> x, const SearchConfig& cfg, std::size_t& iters) {
  double h = h_value(GapVector(x));
  std::vector<double> grad = grad_h(GapVector(x));
  double alpha = 1.0;
  iters = 0;
  while (iters < cfg.max_iters) {
    if (projected_gradient(x, grad, cfg) <= cfg.step_tol) break;
    ++iters;
    std::vector<double> trial(x.size());
    double a = alpha;
    double h_trial = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - a * grad[i];
      trial = project_gaps(trial, cfg);
      double decrease = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) decrease += grad[i] * (x[i] - trial[i]);
      h_trial = h_value(GapVector(trial));
      if (h_trial <= h - 1e-4 * decrease) {
        accepted = true;
        break;
      }
      a *= 0.5;
    }
    if (!accepted) break;
    std::vector<double> grad_trial = grad_h(GapVector(trial));
    double ss = 0.0, sy = 0.0, step = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double s = trial[i] - x[i];
      const double y = grad_trial[i] - grad[i];
      ss += s * s;
      sy += s * y;
      step = std::max(step, std::abs(s));
    }
    alpha = sy > 0.0 ? std::clamp(ss / sy, 1e-8, 1e8) : std::min(1e8, 2.0 * a);
    const double dh = h - h_trial;
    x = std::move(trial);
    grad = std::move(grad_trial);
    h = h_trial;
    if (dh < cfg.value_tol && step < cfg.step_tol) break;
  }
  return x;
}

// Newton iterations on grad H = 0 with a difference Hessian built from the
// analytic gradient; used once descent stalls at the precision floor of H.
std::vector<double> newton_refine(std::vector<double> x, const SearchConfig& cfg) {
  const std::size_t d = x.size();
  std::vector<double> grad = grad_h(GapVector(x));
  double gnorm = inf_norm(grad);
  for (int it = 0; it < 8 && gnorm > 1e-14; ++it) {
    std::vector<double> hess(d * d);
    for (std::size_t k = 0; k < d; ++k) {
      const double h = 1e-6 * std::max(1.0, x[k]);
      auto xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      if (xm[k] <= 0.0) return x;
      const auto gp = grad_h(GapVector(xp));
      const auto gm = grad_h(GapVector(xm));
      for (std::size_t i = 0; i < d; ++i) hess[i * d + k] = (gp[i] - gm[i]) / (2.0 * h);
    }
    // Gaussian elimination with partial pivoting on [H | -g].
    std::vector<double> rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = -grad[i];
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < d; ++r) {
        if (std::abs(hess[r * d + col]) > std::abs(hess[piv * d + col])) piv = r;
      }
      if (std::abs(hess[piv * d + col]) < 1e-300) return x;
      if (piv != col) {
        for (std::size_t c = 0; c < d; ++c) std::swap(hess[col * d + c], hess[piv * d + c]);
        std::swap(rhs[col], rhs[piv]);
      }
      for (std::size_t r = col + 1; r < d; ++r) {
        const double f = hess[r * d + col] / hess[col * d + col];
        for (std::size_t c = col; c < d; ++c) hess[r * d + c] -= f * hess[col * d + c];
        rhs[r] -= f * rhs[col];
      }
    }
    std::vector<double> delta(d);
    for (std::size_t i = d; i-- > 0;) {
      double s = rhs[i];
      for (std::size_t c = i + 1; c < d; ++c) s -= hess[i * d + c] * delta[c];
      delta[i] = s / hess[i * d + i];
    }
    std::vector<double> trial(d);
    for (std::size_t i = 0; i < d; ++i) trial[i] = x[i] + delta[i];
    if (!is_interior(trial, cfg)) return x;
    const auto grad_trial = grad_h(GapVector(trial));
    const double trial_norm = inf_norm(grad_trial);
    if (!(trial_norm < gnorm)) return x;
    x = std::move(trial);
    grad = grad_trial;
    gnorm = trial_norm;
  }
  return x;
}

std::vector<double> draw_start(std::mt19937_64& rng, const SearchConfig& cfg) {
  std::uniform_real_distribution<double> u(cfg.gap_lo, cfg.gap_hi);
  const std::size_t dim = 2 * cfg.n - 1;
  std::vector<double> a(dim);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (double& v : a) v = u(rng);
    a = project_gaps(a, cfg);
    if (!cfg.scaling_filter || passes_scaling_filter(GapVector(a))) break;
  }
  return a;
}

}  // namespace

MinimizeResult minimize_h(const SearchConfig& cfg) {
  cfg.validate();
  MinimizeResult result;
  result.restarts.reserve(cfg.restarts);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    auto rng = task_rng(cfg.rng_seed, r);
    RestartOutcome out;
    out.index = r;
    const auto start = draw_start(rng, cfg);
    out.start = GapVector(start);
    auto x = run_simplex(start, cfg, out.simplex_iterations);
    x = run_gradient(std::move(x), cfg, out.gradient_iterations);
    if (is_interior(x, cfg)) x = newton_refine(std::move(x), cfg);
    out.gaps = GapVector(x);
    out.h = h_value(out.gaps);
    out.projected_gradient = projected_gradient(x, grad_h(out.gaps), cfg);
    out.converged = out.projected_gradient <= 10.0 * cfg.step_tol;
    out.interior = is_interior(x, cfg);
    result.restarts.push_back(std::move(out));
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < result.restarts.size(); ++r) {
    if (result.restarts[r].h < result.restarts[best].h) best = r;
  }
  result.best_restart = best;
  result.best = result.restarts[best].gaps;
  result.breakdown = h_gap(result.best);
  if (result.restarts[best].interior) result.certificate = certificate_check(result.best);
  return result;
}

// -------------------------------------------------------------------- scan

void ScanConfig::validate() const {
  if (n < 2) throw std::invalid_argument("ScanConfig: n must be at least 2");
  if (!(t_max > 0.0) || !(hole_max > 0.0)) throw std::invalid_argument("ScanConfig: ranges must be positive");
  if (grid < 1) throw std::invalid_argument("ScanConfig: grid must be at least 1");
  if (family == ScanFamily::equal_hole_and_last_length && n != 3) {
    throw std::invalid_argument("ScanConfig: the a2 = a5 family needs n = 3");
  }
  if (family == ScanFamily::even_integers && !(even_max >= 2.0)) {
    throw std::invalid_argument("ScanConfig: even_max must be at least 2");
  }
}

QuadratureResult oracle_h(const GapVector& g, const QuadratureSpec& spec) {
  const IntervalUnion i({0.0, g.total_length()});
  const IntervalUnion j(endpoints_from_gaps(g));
  const auto ri = oracle_set_form(i, i, spec);
  const auto rj = oracle_set_form(j, j, spec);
  QuadratureResult out;
  out.value = ri.value - rj.value;
  out.error = ri.error + rj.error;
  out.converged = ri.converged && rj.converged;
  out.evaluations = ri.evaluations + rj.evaluations;
  return out;
}

namespace {

double radical_inverse(std::uint64_t index, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Maps free coordinates in (0, 1] to a gap vector of the family; returns
// false when the point violates the length cap.
bool build_gaps(const std::vector<double>& u, const ScanConfig& cfg, std::vector<double>& a) {
  const std::size_t dim = 2 * cfg.n - 1;
  a.assign(dim, 0.0);
  if (cfg.family == ScanFamily::equal_hole_and_last_length) {
    a[0] = u[0] * cfg.t_max;
    a[1] = u[1] * std::min(cfg.hole_max, cfg.t_max);
    a[2] = u[2] * cfg.t_max;
    a[3] = u[3] * cfg.hole_max;
    a[4] = a[1];
  } else {
    for (std::size_t i = 0; i < dim; ++i) a[i] = u[i] * ((i % 2 == 0) ? cfg.t_max : cfg.hole_max);
  }
  double len = 0.0;
  for (std::size_t i = 0; i < dim; i += 2) len += a[i];
  return len <= cfg.t_max;
}

std::size_t free_dims(const ScanConfig& cfg) {
  return cfg.family == ScanFamily::equal_hole_and_last_length ? 4 : 2 * cfg.n - 1;
}

}  // namespace

ScanReport counterexample_scan(const ScanConfig& cfg) {
  cfg.validate();
  ScanReport report;
  report.min_h = std::numeric_limits<double>::infinity();
  std::vector<ScanRow> all;
  std::vector<GapVector> negatives;

  auto visit = [&](const std::vector<double>& a) {
    GapVector g(a);
    const double h = h_value(g);
    ++report.evaluated;
    if (h < report.min_h) {
      report.min_h = h;
      report.argmin = g;
    }
    if (h < cfg.violation_threshold) {
      ++report.negative_count;
      negatives.push_back(g);
    }
    all.push_back({std::move(g), h});
  };

  std::vector<double> a;
  if (cfg.family == ScanFamily::even_integers) {
    const std::size_t dim = 2 * cfg.n - 1;
    const auto levels = static_cast<std::size_t>(std::floor(cfg.even_max / 2.0));
    std::vector<std::size_t> idx(dim, 0);
    for (;;) {
      a.assign(dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i) a[i] = 2.0 * static_cast<double>(idx[i] + 1);
      visit(a);
      std::size_t k = 0;
      while (k < dim && ++idx[k] == levels) idx[k++] = 0;
      if (k == dim) break;
    }
  } else {
    const std::size_t dim = free_dims(cfg);
    const double lattice_size = std::pow(static_cast<double>(cfg.grid), static_cast<double>(dim));
    if (lattice_size <= static_cast<double>(cfg.lattice_cap)) {
      std::vector<std::size_t> idx(dim, 0);
      std::vector<double> u(dim);
      for (;;) {
        for (std::size_t i = 0; i < dim; ++i) u[i] = static_cast<double>(idx[i] + 1) / static_cast<double>(cfg.grid);
        if (build_gaps(u, cfg, a)) visit(a);
        std::size_t k = 0;
        while (k < dim && ++idx[k] == cfg.grid) idx[k++] = 0;
        if (k == dim) break;
      }
    }
    // Randomly shifted Halton points.
    auto rng = task_rng(cfg.seed, 0);
    std::uniform_real_distribution<double> shift_dist(0.0, 1.0);
    std::vector<double> shift(dim);
    for (double& s : shift) s = shift_dist(rng);
    std::vector<double> u(dim);
    for (std::size_t k = 1; k <= cfg.quasi_random; ++k) {
      for (std::size_t i = 0; i < dim; ++i) {
        double v = radical_inverse(k, kPrimes[i % std::size(kPrimes)]) + shift[i];
        v -= std::floor(v);
        u[i] = v > 0.0 ? v : 1.0;
      }
      if (build_gaps(u, cfg, a)) visit(a);
    }
  }

  QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-11;
  for (const auto& g : negatives) {
    const auto r = oracle_h(g, spec);
    ScanViolation v{g, h_value(g), r.value, r.converged && r.value < cfg.violation_threshold};
    (v.confirmed ? report.violations : report.rejected).push_back(std::move(v));
  }

  const std::size_t keep = std::min(cfg.keep_rows, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                    [](const ScanRow& x, const ScanRow& y) { return x.h < y.h; });
  all.resize(keep);
  report.rows = std::move(all);
  return report;
}

// ----------------------------------------------------------------- remark1

namespace {

struct Remark1Pair {
  StepFunction f;
  StepFunction f_star;
};

Remark1Pair remark1_functions(double total, double t0, double eps, double m, double k_start) {
  const double k_end = k_start + (total - t0);
  std::vector<StepPiece> pieces = {{{0.0, eps}, m}, {{eps, t0}, 1.0}};
  if (k_end > k_start) pieces.push_back({{k_start, k_end}, 1.0});
  StepFunction f(std::move(pieces));
  return {f, rearrange_step(f)};
}

}  // namespace

double remark1_margin(double total, double t0, double eps, double m, double k_start) {
  const auto p = remark1_functions(total, t0, eps, m, k_start);
  return step_form(p.f, p.f) - step_form(p.f_star, p.f_star);
}

Remark1Result remark1_search(const Remark1Config& cfg) {
  Remark1Result out;
  out.t0 = threshold_t0();
  if (!(cfg.total >= out.t0)) throw std::invalid_argument("remark1_search: total length must be at least T0");
  if (cfg.c_steps < 1) throw std::invalid_argument("remark1_search: c_steps must be at least 1");
  out.margin = -std::numeric_limits<double>::infinity();
  for (double eps : cfg.eps_grid) {
    if (!(eps > 0.0 && eps < out.t0)) throw std::invalid_argument("remark1_search: eps must lie in (0, T0)");
    for (double m : cfg.m_grid) {
      if (!(m > 1.0)) throw std::invalid_argument("remark1_search: M must exceed 1");
      for (std::size_t i = 1; i <= cfg.c_steps; ++i) {
        const double c = 1.0 + 9.0 * static_cast<double>(i) / static_cast<double>(cfg.c_steps);
        const double margin = remark1_margin(cfg.total, out.t0, eps, m, c);
        ++out.candidates;
        out.rows.push_back({eps, m, c, margin});
        if (margin > out.margin) {
          out.margin = margin;
          out.eps = eps;
          out.m = m;
          out.k_start = c;
        }
      }
    }
  }
  const double k_end = out.k_start + (cfg.total - out.t0);
  out.w = si(k_end) - si(out.k_start) - (si(cfg.total) - si(out.t0));
  out.c_term = pair_form({0.0, out.t0}, {out.k_start, k_end}) - pair_form({0.0, out.t0}, {out.t0, cfg.total});
  const auto p = remark1_functions(cfg.total, out.t0, out.eps, out.m, out.k_start);
  out.f = p.f;
  out.f_star = p.f_star;
  out.found = out.margin > 0.0;

  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-12;
  const auto of = oracle_step_form(p.f, p.f, spec);
  const auto os = oracle_step_form(p.f_star, p.f_star, spec);
  out.oracle_margin = of.value - os.value;
  out.confirmed = out.found && of.converged && os.converged && out.oracle_margin > 0.0;
  return out;
}

}  // namespace specon
