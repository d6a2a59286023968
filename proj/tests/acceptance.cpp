// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "specon/bounds.hpp"
#include "specon/cli.hpp"
#include "specon/quadrature.hpp"
#include "specon/search.hpp"
#include "specon/specfun.hpp"
#include "specon/spectral.hpp"

using namespace specon;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto t = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.passed) ++failures;
  std::printf("%s C%d %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              seconds_since(t));
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt2(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string sub_summary(const BoundReport& r) {
  std::string s;
  for (const auto& c : r.checks) s += " " + c.name + "=" + fmt("%.3g", c.worst_slack) + (c.passed ? "" : "!");
  return s;
}

Outcome from_report(const BoundReport& r) {
  return {r.passed, "worst slack " + fmt("%.6g", r.worst_slack) + " over " + std::to_string(r.samples) + " samples;" +
                        sub_summary(r)};
}

std::vector<double> sorted_uniform(std::mt19937_64& rng, std::size_t count, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> x(count);
  for (double& v : x) v = u(rng);
  std::sort(x.begin(), x.end());
  return x;
}

GapVector random_gap_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> a(2 * n - 1);
  for (double& v : a) v = u(rng);
  return GapVector(a);
}

json strip_times(json j) {
  if (j.is_object()) {
    j.erase("started");
    j.erase("finished");
    for (auto& [k, v] : j.items()) v = strip_times(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_times(v);
  }
  return j;
}

std::map<std::string, std::string> snapshot(const std::filesystem::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (name.rfind("verify_", 0) != 0) continue;
    std::ifstream f(e.path());
    std::stringstream ss;
    ss << f.rdbuf();
    out[name] = e.path().extension() == ".json" ? strip_times(json::parse(ss.str())).dump() : ss.str();
  }
  return out;
}

Outcome c1() {
  const auto t = Clock::now();
  const auto r = verify_t_identities(1000, 1);
  const double s = seconds_since(t);
  auto o = from_report(r);
  o.passed = o.passed && s < 5.0;
  o.detail += "; runtime " + fmt("%.2f s (limit 5 s)", s);
  return o;
}

Outcome c2() {
  const auto t = Clock::now();
  std::mt19937_64 rng(2002);
  double worst = 0.0;
  bool converged = true;
  for (int trial = 0; trial < 200; ++trial) {
    if (trial % 2 == 0) {
      const auto x = sorted_uniform(rng, 4, 0.0, 20.0);
      const Interval i1{x[0], x[1]}, i2{x[2], x[3]};
      const auto o = oracle_pair_form(i1, i2);
      converged = converged && o.converged;
      worst = std::max(worst, std::abs(pair_form(i1, i2) - o.value));
    } else {
      const std::size_t n = 1 + (trial / 2) % 4;
      const IntervalUnion a(sorted_uniform(rng, 2 * n, 0.0, 20.0));
      const IntervalUnion b(sorted_uniform(rng, 2 * (1 + trial % 4), 0.0, 20.0));
      const auto o = oracle_set_form(a, b);
      converged = converged && o.converged;
      worst = std::max(worst, std::abs(set_form(a, b) - o.value));
    }
  }
  const double s = seconds_since(t);
  return {worst < 1e-8 && converged && s < 60.0,
          "max abs error " + fmt("%.3g (limit 1e-8)", worst) + ", runtime " + fmt("%.2f s", s)};
}

Outcome c3() {
  std::mt19937_64 rng(3003);
  double worst = 0.0;
  bool converged = true;
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_gap_vector(rng, 2 + trial % 3, 0.01, 6.0);
    const auto b = h_gap(g);
    converged = converged && b.quadrature_converged;
    worst = std::max({worst, std::abs(b.form_a - b.form_b), std::abs(b.form_c - b.form_b)});
  }
  return {worst < 1e-7 && converged, "max form disagreement " + fmt("%.3g (limit 1e-7)", worst)};
}

Outcome c4() {
  std::mt19937_64 rng(4004);
  double worst = 0.0;
  bool converged = true;
  const QuadratureSpec spec{1e-12, 1e-12};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const AltPoly p(sorted_uniform(rng, 2 * n, 0.0, 10.0));
    const auto two = p.two_term_equivalent();
    const double upper = 4.0;
    const auto hp = poly_sq_over_t2(p, upper, true, spec);
    const auto h2 = poly_sq_over_t2(two, upper, true, spec);
    converged = converged && hp.converged && h2.converged;
    const double lhs = hp.value + poly_sq_over_t2_tail(p, upper, true);
    const double rhs = h2.value + poly_sq_over_t2_tail(two, upper, true);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {worst < 1e-6 && converged, "max head+tail difference " + fmt("%.3g (limit 1e-6)", worst)};
}

Outcome c8() {
  const auto r = verify_l2_bounds(100000, 1);
  auto o = from_report(r);
  return o;
}

Outcome c11() {
  std::mt19937_64 rng(1111);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_gap_vector(rng, 2 + trial % 4, 0.05, 5.0);
    const auto grad = grad_h(g);
    double diff = 0.0, scale = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
      auto plus = g.vec(), minus = g.vec();
      const double h = 1e-5 * std::max(1.0, g[m]);
      plus[m] += h;
      minus[m] -= h;
      const double fd = (h_value(GapVector(plus)) - h_value(GapVector(minus))) / (2 * h);
      diff = std::max(diff, std::abs(grad[m] - fd));
      scale = std::max(scale, std::abs(fd));
    }
    worst = std::max(worst, diff / scale);
  }
  return {worst <= 1e-5, "max relative error " + fmt("%.3g (limit 1e-5, infinity norm per point)", worst)};
}

Outcome c12() {
  std::size_t interior = 0;
  double stat = 0.0, scale = 0.0, impo = INFINITY, chain = INFINITY, h_at_chain = 0.0;
  for (std::size_t n = 2; n <= 4; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.restarts = 16;
    cfg.rng_seed = 12;
    const auto r = minimize_h(cfg);
    for (const auto& o : r.restarts) {
      if (!o.interior) continue;
      ++interior;
      const auto c = certificate_check(o.gaps);
      stat = std::max(stat, c.stationarity_residual);
      scale = std::max(scale, c.scale_residual);
      impo = std::min(impo, c.impo_slack);
      if (c.chain_inequality_slack < chain) {
        chain = c.chain_inequality_slack;
        h_at_chain = c.h_value;
      }
    }
  }
  const bool ok = interior > 0 && stat < 1e-6 && impo >= -1e-8 && scale < 1e-6 && chain >= -1e-8;
  return {ok, std::to_string(interior) + " interior outputs; stationarity " + fmt("%.3g", stat) + ", impo slack " +
                  fmt("%.3g", impo) + ", scale " + fmt("%.3g", scale) + ", boundary inequality slack " +
                  fmt2("%.6g (at H = %.6g)", chain, h_at_chain)};
}

Outcome c13() {
  Remark1Config cfg;
  cfg.total = 1.2;
  const auto r = remark1_search(cfg);
  const bool ok = r.found && r.margin > 0.0 && r.confirmed && r.oracle_margin > 0.0;
  return {ok, "margin " + fmt2("%.6g, oracle margin %.6g", r.margin, r.oracle_margin) +
                  fmt2(", eps %.3g, M %.3g", r.eps, r.m) + fmt(", K starts at %.4g", r.k_start)};
}

Outcome c14() {
  const auto dir = output_directory();
  std::filesystem::remove_all(dir);
  const std::vector<std::string> args = {"verify", "--suite", "all", "--samples", "100", "--seed", "1"};
  std::ostringstream sink;
  const auto t = Clock::now();
  const int code1 = run_cli(args, sink, sink);
  const double s = seconds_since(t);
  const auto first = snapshot(dir);
  const int code2 = run_cli(args, sink, sink);
  const auto second = snapshot(dir);
  const bool same = !first.empty() && first == second;
  return {code1 == 0 && code2 == 0 && same && s < 60.0,
          std::to_string(first.size()) + " files " + (same ? "identical" : "differ") + ", exit codes " +
              std::to_string(code1) + "/" + std::to_string(code2) + ", suite runtime " + fmt("%.2f s", s)};
}

}  // namespace

int main() {
  report(1, "T-operator identities", c1);
  report(2, "closed forms vs quadrature oracle", c2);
  report(3, "three forms of H agree", c3);
  report(4, "head+tail infinite integrals agree", c4);
  report(5, "H >= -1e-9 for T <= 4/3", [] { return from_report(verify_wt_threshold(100000, 1)); });
  report(6, "two-interval H > 0", [] { return from_report(verify_two_interval(0.05, 10000, 1)); });
  report(7, "-4/pi^2 < H < (54n-51)/pi^2", [] { return from_report(verify_iac_and_cor_new(100000, 1)); });
  report(8, "alternating polynomial L2 bound", c8);
  report(9, "averaging identity and bound", [] { return from_report(verify_avg_lemma(1000, 1)); });
  report(10, "threshold T0", [] {
    const auto r = verify_t0();
    auto o = from_report(r);
    o.detail = "T0 = " + fmt("%.17g", compute_t0()) + ";" + sub_summary(r);
    return o;
  });
  report(11, "gradient vs central differences", c11);
  report(12, "certificate at interior minimizer outputs", c12);
  report(13, "two-valued step function beats its rearrangement at T = 1.2", c13);
  report(14, "verify determinism and runtime", c14);
  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
