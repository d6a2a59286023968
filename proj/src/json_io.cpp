#include "specon/json_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <stdexcept>

namespace specon {

using nlohmann::json;

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

namespace {

json numbers(std::span<const double> xs) {
  json out = json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

std::vector<double> read_numbers(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw std::invalid_argument(std::string("expected an array under \"") + key + "\"");
  }
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw std::invalid_argument(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

json to_json(const IntervalUnion& a) { return {{"endpoints", numbers(a.endpoints())}}; }

json to_json(const GapVector& g) { return {{"gaps", numbers(g.values())}}; }

json to_json(const StepFunction& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back({{"lo", number(p.interval.lo)}, {"hi", number(p.interval.hi)}, {"value", number(p.value)}});
  }
  return {{"pieces", pieces}};
}

json to_json(const ConcentrationResult& c) {
  return {{"value", number(c.value)},
          {"bandwidth", number(c.bandwidth)},
          {"product", number(c.product)},
          {"band_energy", number(c.band_energy())},
          {"fraction", number(c.fraction())}};
}

json to_json(const HBreakdown& h) {
  return {{"h_value", number(h.h_value)},         {"form_a", number(h.form_a)},
          {"form_b", number(h.form_b)},           {"form_c", number(h.form_c)},
          {"form_a_error", number(h.form_a_error)}, {"form_c_error", number(h.form_c_error)},
          {"max_disagreement", number(h.max_disagreement())},
          {"quadrature_converged", h.quadrature_converged}};
}

json to_json(const Certificate& c) {
  return {{"stationarity_residual", number(c.stationarity_residual)},
          {"second_order_residuals", numbers(c.second_order_residuals)},
          {"impo_slack", number(c.impo_slack)},
          {"impo_identity_residual", number(c.impo_identity_residual)},
          {"scale_residual", number(c.scale_residual)},
          {"h_value", number(c.h_value)},
          {"boundary_form_identity_residual", number(c.boundary_form_identity_residual)},
          {"chain_inequality_slack", number(c.chain_inequality_slack)},
          {"gradient_norm", number(c.gradient_norm)},
          {"index_convention", c.index_convention}};
}

json to_json(const CertificateVerdict& v) {
  return {{"stationary", v.stationary}, {"second_order", v.second_order}, {"impo", v.impo},
          {"scale", v.scale},           {"chain", v.chain},               {"all", v.all()}};
}

json to_json(const SuperlevelReport& s) {
  return {{"level", number(s.level)},
          {"min_inside", number(s.min_inside)},
          {"max_outside", number(s.max_outside)},
          {"inside_violation", number(s.inside_violation)},
          {"outside_violation", number(s.outside_violation)},
          {"grid_points", s.grid_points},
          {"level_positive", s.level_positive}};
}

json to_json(const SearchConfig& c) {
  json j = {{"n", c.n},
            {"gap_bounds", {number(c.gap_lo), number(c.gap_hi)}},
            {"restarts", c.restarts},
            {"rng_seed", c.rng_seed},
            {"step_tol", number(c.step_tol)},
            {"value_tol", number(c.value_tol)},
            {"max_iters", c.max_iters},
            {"scaling_filter", c.scaling_filter}};
  j["t_max"] = c.t_max ? number(*c.t_max) : json(nullptr);
  return j;
}

json to_json(const RestartOutcome& r) {
  return {{"index", r.index},
          {"start", numbers(r.start.values())},
          {"gaps", numbers(r.gaps.values())},
          {"h", number(r.h)},
          {"projected_gradient", number(r.projected_gradient)},
          {"simplex_iterations", r.simplex_iterations},
          {"gradient_iterations", r.gradient_iterations},
          {"converged", r.converged},
          {"interior", r.interior}};
}

json to_json(const MinimizeResult& m) {
  json restarts = json::array();
  for (const auto& r : m.restarts) restarts.push_back(to_json(r));
  json j = {{"min_h", number(m.breakdown.h_value)},
            {"argmin_gaps", numbers(m.best.values())},
            {"best_restart", m.best_restart},
            {"breakdown", to_json(m.breakdown)},
            {"restarts", restarts}};
  if (m.certificate) {
    j["certificate"] = to_json(*m.certificate);
    j["certificate_verdict"] = to_json(judge(*m.certificate));
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

namespace {

const char* family_name(ScanFamily f) {
  switch (f) {
    case ScanFamily::generic:
      return "generic";
    case ScanFamily::equal_hole_and_last_length:
      return "a2_equals_a5";
    case ScanFamily::even_integers:
      return "even_integers";
  }
  return "unknown";
}

json violations_json(const std::vector<ScanViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back({{"gaps", numbers(v.gaps.values())},
                   {"h_closed", number(v.h_closed)},
                   {"h_oracle", number(v.h_oracle)},
                   {"confirmed", v.confirmed}});
  }
  return out;
}

}  // namespace

json to_json(const ScanConfig& c) {
  return {{"n", c.n},
          {"t_max", number(c.t_max)},
          {"hole_max", number(c.hole_max)},
          {"grid", c.grid},
          {"lattice_cap", c.lattice_cap},
          {"quasi_random", c.quasi_random},
          {"seed", c.seed},
          {"family", family_name(c.family)},
          {"even_max", number(c.even_max)},
          {"violation_threshold", number(c.violation_threshold)}};
}

json to_json(const ScanReport& s) {
  return {{"evaluated", s.evaluated},
          {"min_h", number(s.min_h)},
          {"argmin_gaps", numbers(s.argmin.values())},
          {"negative_count", s.negative_count},
          {"violations", violations_json(s.violations)},
          {"rejected", violations_json(s.rejected)}};
}

json to_json(const Remark1Config& c) {
  return {{"total", number(c.total)}, {"eps_grid", numbers(c.eps_grid)}, {"m_grid", numbers(c.m_grid)},
          {"c_steps", c.c_steps}};
}

json to_json(const Remark1Result& r) {
  return {{"t0", number(r.t0)},
          {"found", r.found},
          {"margin", number(r.margin)},
          {"oracle_margin", number(r.oracle_margin)},
          {"confirmed", r.confirmed},
          {"eps", number(r.eps)},
          {"m", number(r.m)},
          {"k_start", number(r.k_start)},
          {"w", number(r.w)},
          {"c_term", number(r.c_term)},
          {"f", to_json(r.f)},
          {"f_star", to_json(r.f_star)},
          {"candidates", r.candidates}};
}

json to_json(const SubCheck& c) {
  return {{"name", c.name},
          {"worst_slack", number(c.worst_slack)},
          {"tolerance", number(c.tolerance)},
          {"strict", c.strict},
          {"passed", c.passed}};
}

json to_json(const BoundReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"name", r.name},
          {"samples", r.samples},
          {"seed", r.seed},
          {"worst_slack", number(r.worst_slack)},
          {"worst_case", r.worst_case},
          {"tolerance", number(r.tolerance)},
          {"strict", r.strict},
          {"passed", r.passed},
          {"checks", checks},
          {"violations", r.violations}};
}

IntervalUnion union_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  if (j.contains("endpoints")) return IntervalUnion(read_numbers(j, "endpoints"));
  if (j.contains("gaps")) return from_gaps(GapVector(read_numbers(j, "gaps")));
  throw std::invalid_argument("expected \"endpoints\" or \"gaps\"");
}

GapVector gaps_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  if (j.contains("gaps")) return GapVector(read_numbers(j, "gaps"));
  if (j.contains("endpoints")) return to_gaps(IntervalUnion(read_numbers(j, "endpoints")));
  throw std::invalid_argument("expected \"endpoints\" or \"gaps\"");
}

StepFunction step_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array()) {
    throw std::invalid_argument("expected {\"pieces\": [...]}");
  }
  std::vector<StepPiece> pieces;
  for (const auto& p : j["pieces"]) {
    if (!p.is_object() || !p.contains("lo") || !p.contains("hi") || !p.contains("value")) {
      throw std::invalid_argument("each piece needs lo, hi and value");
    }
    pieces.push_back({{p["lo"].get<double>(), p["hi"].get<double>()}, p["value"].get<double>()});
  }
  return StepFunction(std::move(pieces));
}

json to_json(const RunManifest& m) {
  return {{"command", m.command},
          {"config", m.config},
          {"artifact_version", m.artifact_version},
          {"seed", m.seed},
          {"started", m.started},
          {"finished", m.finished}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace specon
