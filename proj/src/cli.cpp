#include "specon/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "specon/bounds.hpp"
#include "specon/json_io.hpp"
#include "specon/search.hpp"
#include "specon/spectral.hpp"

namespace specon {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path output_directory() {
  const char* env = std::getenv("SPECON_OUT");
  if (env != nullptr && *env != '\0') return fs::path(env);
  return fs::path("out");
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": cannot parse \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw UsageError(std::string(what) + ": trailing characters in \"" + item + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty list");
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

// Writes the CSV and its manifest sidecar.
void write_csv(const fs::path& path, const std::string& header, const std::vector<std::string>& lines,
               const RunManifest& manifest) {
  std::string text = header + "\n";
  for (const auto& l : lines) text += l + "\n";
  write_text(path, text);
  json sidecar = to_json(manifest);
  sidecar["data"] = path.filename().string();
  write_text(fs::path(path.string() + ".manifest.json"), sidecar.dump(2) + "\n");
}

std::string join(const std::vector<double>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += sep;
    s += format_double(xs[i]);
  }
  return s;
}

// ------------------------------------------------------------------ eval

struct EvalArgs {
  std::string gaps;
  std::string endpoints;
  double bandwidth = 1.0;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.gaps.empty() == a.endpoints.empty()) throw UsageError("eval: give exactly one of --gaps or --endpoints");
  if (!(a.bandwidth > 0.0) || !std::isfinite(a.bandwidth)) throw UsageError("eval: --bandwidth must be positive");

  GapVector gaps;
  IntervalUnion raw;
  try {
    if (!a.gaps.empty()) {
      gaps = GapVector(parse_list(a.gaps, "--gaps"));
      raw = IntervalUnion(endpoints_from_gaps(gaps));
    } else {
      raw = IntervalUnion(parse_list(a.endpoints, "--endpoints"));
      gaps = GapVector([&] {
        const auto e = raw.endpoints();
        std::vector<double> v;
        for (std::size_t i = 1; i < e.size(); ++i) v.push_back(e[i] - e[i - 1]);
        return v;
      }());
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("eval: ") + e.what());
  }

  const IntervalUnion a_set = raw.canonical();
  const IntervalUnion a_star = rearrange(a_set);
  const GapVector scaled = gaps.scaled(a.bandwidth);

  json j;
  j["input"] = to_json(gaps);
  j["input"]["endpoints"] = to_json(raw)["endpoints"];
  j["bandwidth"] = number(a.bandwidth);
  j["set"] = to_json(a_set);
  j["rearranged"] = to_json(a_star);
  j["concentration"] = to_json(concentration(a_set, a.bandwidth));
  j["concentration_rearranged"] = to_json(concentration(a_star, a.bandwidth));
  // H at bandwidth W is H of the dilated gap vector.
  j["h"] = to_json(h_gap(scaled));
  if (scaled.interior()) {
    const auto c = certificate_check(scaled);
    j["certificate"] = to_json(c);
    j["certificate_verdict"] = to_json(judge(c));
  } else {
    j["certificate"] = nullptr;
    j["certificate_note"] = "some gap is zero; the certificate needs an interior point";
  }
  out << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double grid_step = 0.1;
};

int cmd_verify(const VerifyArgs& a, const std::string& command, std::ostream& out) {
  RunManifest manifest;
  manifest.command = command;
  manifest.seed = a.seed;
  manifest.config = {{"suite", a.suite}, {"samples", a.samples}, {"seed", a.seed}, {"grid_step", number(a.grid_step)}};
  manifest.started = utc_timestamp();

  const bool all = a.suite == "all";
  std::vector<BoundReport> reports;
  if (all || a.suite == "identities") reports.push_back(verify_t_identities(a.samples, a.seed));
  if (all || a.suite == "thresholds") {
    reports.push_back(verify_t0());
    reports.push_back(verify_wt_threshold(a.samples, a.seed));
    reports.push_back(verify_two_interval(a.grid_step, a.samples, a.seed));
    reports.push_back(verify_iac_and_cor_new(a.samples, a.seed));
  }
  if (all || a.suite == "l2") reports.push_back(verify_l2_bounds(a.samples, a.seed));
  if (all || a.suite == "avg") reports.push_back(verify_avg_lemma(a.samples, a.seed));
  if (all || a.suite == "special") reports.push_back(verify_special_cases());
  manifest.finished = utc_timestamp();

  const fs::path dir = output_directory();
  json payload;
  payload["manifest"] = to_json(manifest);
  payload["reports"] = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    payload["reports"].push_back(to_json(r));
    ok = ok && r.passed;
    std::vector<std::string> lines;
    lines.reserve(r.rows.size());
    for (const auto& row : r.rows) lines.push_back(join(row.input, ';') + "," + format_double(row.slack));
    write_csv(dir / ("verify_" + r.name + ".csv"), "input,slack", lines, manifest);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " samples=" << r.samples
        << " worst_slack=" << format_double(r.worst_slack) << "\n";
    for (const auto& c : r.checks) {
      out << "  " << (c.passed ? "pass " : "fail ") << c.name << " worst_slack=" << format_double(c.worst_slack)
          << "\n";
    }
  }
  write_text(dir / ("verify_" + a.suite + ".json"), payload.dump(2) + "\n");
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::size_t n = 2;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
  std::optional<double> t_max;
  std::string mode = "minimize";
  double t = 1.2;
  std::size_t grid = 8;
  std::size_t samples = 20000;
  std::string family = "generic";
};

int cmd_search(const SearchArgs& a, const std::string& command, std::ostream& out) {
  RunManifest manifest;
  manifest.command = command;
  manifest.seed = a.seed;
  manifest.started = utc_timestamp();

  json report;
  json config;
  std::vector<std::string> lines;
  std::string header;
  auto gap_line = [](const GapVector& g, double h) { return join(g.vec(), ';') + "," + format_double(h); };

  try {
    if (a.mode == "minimize") {
      SearchConfig cfg;
      cfg.n = a.n;
      cfg.restarts = a.restarts;
      cfg.rng_seed = a.seed;
      cfg.t_max = a.t_max;
      cfg.validate();
      config = to_json(cfg);
      const auto r = minimize_h(cfg);
      report = to_json(r);
      header = "gaps,h";
      for (const auto& o : r.restarts) lines.push_back(gap_line(o.gaps, o.h));
    } else if (a.mode == "scan") {
      ScanConfig cfg;
      cfg.n = a.n;
      cfg.seed = a.seed;
      if (a.t_max) cfg.t_max = *a.t_max;
      cfg.grid = a.grid;
      cfg.quasi_random = a.samples;
      if (a.family == "a2_equals_a5") {
        cfg.family = ScanFamily::equal_hole_and_last_length;
      } else if (a.family == "even_integers") {
        cfg.family = ScanFamily::even_integers;
      }
      cfg.validate();
      config = to_json(cfg);
      const auto r = counterexample_scan(cfg);
      report = to_json(r);
      header = "gaps,h";
      for (const auto& row : r.rows) lines.push_back(gap_line(row.gaps, row.h));
    } else {
      Remark1Config cfg;
      cfg.total = a.t;
      config = to_json(cfg);
      const auto r = remark1_search(cfg);
      report = to_json(r);
      header = "eps,m,k_start,margin";
      for (const auto& row : r.rows) {
        lines.push_back(format_double(row.eps) + "," + format_double(row.m) + "," + format_double(row.k_start) + "," +
                        format_double(row.margin));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("search: ") + e.what());
  }
  manifest.config = config;
  manifest.finished = utc_timestamp();

  json payload = {{"manifest", to_json(manifest)}, {"config_echo", config}, {"report", report}};
  const fs::path dir = output_directory();
  write_text(dir / ("search_" + a.mode + ".json"), payload.dump(2) + "\n");
  write_csv(dir / ("search_" + a.mode + ".csv"), header, lines, manifest);
  out << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral concentration of interval unions"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Concentration, H and certificate of one configuration");
  eval->add_option("--gaps", eval_args.gaps, "Comma-separated gap vector a1,...,a_{2n-1}");
  eval->add_option("--endpoints", eval_args.endpoints, "Comma-separated endpoints x1,...,x_{2n}");
  eval->add_option("--bandwidth", eval_args.bandwidth, "Bandwidth W");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Sampled verification of the bounds");
  verify->add_option("--suite", verify_args.suite)
      ->check(CLI::IsMember({"identities", "thresholds", "l2", "avg", "special", "all"}));
  verify->add_option("--samples", verify_args.samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed);
  verify->add_option("--grid-step", verify_args.grid_step, "Lattice step for the two-interval grid")
      ->check(CLI::Range(0.01, 6.0));

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Minimization, counterexample scan, two-valued construction");
  search->add_option("--n", search_args.n)->check(CLI::Range(2, 16));
  search->add_option("--restarts", search_args.restarts)->check(CLI::PositiveNumber);
  search->add_option("--seed", search_args.seed);
  search->add_option("--t-max", search_args.t_max)->check(CLI::PositiveNumber);
  search->add_option("--mode", search_args.mode)->check(CLI::IsMember({"minimize", "scan", "remark1"}));
  search->add_option("--t", search_args.t, "Total length for the two-valued construction");
  search->add_option("--grid", search_args.grid, "Lattice points per coordinate (scan)")->check(CLI::PositiveNumber);
  search->add_option("--samples", search_args.samples, "Quasi-random points (scan)");
  search->add_option("--family", search_args.family)
      ->check(CLI::IsMember({"generic", "a2_equals_a5", "even_integers"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::string command = "specon";
  for (const auto& s : args) command += " " + s;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, command, out);
    return cmd_search(search_args, command, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace specon
