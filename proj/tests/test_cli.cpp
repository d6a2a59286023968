#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "specon/cli.hpp"

using namespace specon;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
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

}  // namespace

TEST_CASE("eval prints concentration, H and certificate") {
  const auto r = run({"eval", "--gaps", "1,2,1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["h"]["h_value"].get<double>() > 0.0);
  CHECK(j["h"]["max_disagreement"].get<double>() < 1e-9);
  CHECK(j["concentration_rearranged"]["value"].get<double>() > j["concentration"]["value"].get<double>());
  CHECK(j["certificate"].is_object());
}

TEST_CASE("eval with a closed hole") {
  const auto r = run({"eval", "--gaps", "1,0,1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["h"]["h_value"].get<double>()) < 1e-14);
  CHECK(j["certificate"].is_null());
  CHECK(j["set"]["endpoints"].size() == 2);
}

TEST_CASE("eval bandwidth is a dilation") {
  const auto a = json::parse(run({"eval", "--gaps", "1,2,1", "--bandwidth", "2"}).out);
  const auto b = json::parse(run({"eval", "--gaps", "2,4,2"}).out);
  CHECK(a["h"]["h_value"].get<double>() == b["h"]["h_value"].get<double>());
  CHECK(a["concentration"]["value"].get<double>() == doctest::Approx(b["concentration"]["value"].get<double>()));
  CHECK(a["concentration"]["product"].get<double>() == b["concentration"]["product"].get<double>());
}

TEST_CASE("eval with endpoints") {
  const auto a = json::parse(run({"eval", "--endpoints", "5,6,8,9"}).out);
  const auto b = json::parse(run({"eval", "--gaps", "1,2,1"}).out);
  CHECK(a["h"]["h_value"].get<double>() == doctest::Approx(b["h"]["h_value"].get<double>()).epsilon(1e-14));
}

TEST_CASE("malformed input exits with 2") {
  CHECK(run({"eval", "--gaps", "1,x,1"}).code == 2);
  CHECK(run({"eval", "--gaps", "1,2"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"eval", "--gaps", "1,2,1", "--endpoints", "0,1"}).code == 2);
  CHECK(run({"eval", "--gaps", "1,2,1", "--bandwidth", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "l2", "--samples", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"search", "--n", "1"}).code == 2);
  CHECK(run({"search", "--mode", "remark1", "--t", "0.2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("verify writes reports, CSVs and manifests") {
  const auto r = run({"verify", "--suite", "identities", "--samples", "1000", "--seed", "7"});
  CHECK(r.code == 0);
  const auto dir = output_directory();
  const auto report = json::parse(slurp(dir / "verify_identities.json"));
  CHECK(report["reports"][0]["passed"].get<bool>());
  CHECK(report["manifest"]["seed"].get<int>() == 7);
  CHECK(report["manifest"]["artifact_version"].is_string());
  const auto csv = slurp(dir / "verify_t_identities.csv");
  CHECK(csv.rfind("input,slack\n", 0) == 0);
  CHECK(std::filesystem::exists(dir / "verify_t_identities.csv.manifest.json"));
}

TEST_CASE("verify is deterministic modulo timestamps") {
  const auto dir = output_directory();
  REQUIRE(run({"verify", "--suite", "l2", "--samples", "200", "--seed", "3"}).code == 0);
  const auto first = strip_times(json::parse(slurp(dir / "verify_l2.json")));
  const auto first_csv = slurp(dir / "verify_l2.csv");
  REQUIRE(run({"verify", "--suite", "l2", "--samples", "200", "--seed", "3"}).code == 0);
  const auto second = strip_times(json::parse(slurp(dir / "verify_l2.json")));
  CHECK(first.dump() == second.dump());
  CHECK(first_csv == slurp(dir / "verify_l2.csv"));
}

TEST_CASE("search modes") {
  const auto dir = output_directory();
  const auto scan = run({"search", "--n", "2", "--mode", "scan", "--samples", "2000"});
  REQUIRE(scan.code == 0);
  CHECK(json::parse(scan.out)["violations"].empty());
  CHECK(std::filesystem::exists(dir / "search_scan.csv.manifest.json"));

  const auto m1 = run({"search", "--n", "3", "--mode", "minimize", "--restarts", "4", "--seed", "3"});
  const auto m2 = run({"search", "--n", "3", "--mode", "minimize", "--restarts", "4", "--seed", "3"});
  REQUIRE(m1.code == 0);
  CHECK(m1.out == m2.out);
  const auto payload = json::parse(slurp(dir / "search_minimize.json"));
  CHECK(payload.contains("config_echo"));
  CHECK(payload["report"].contains("argmin_gaps"));

  const auto rem = run({"search", "--mode", "remark1", "--t", "1.2"});
  REQUIRE(rem.code == 0);
  CHECK(json::parse(rem.out)["margin"].get<double>() > 0.0);
  CHECK(slurp(dir / "search_remark1.csv").rfind("eps,m,k_start,margin\n", 0) == 0);
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == 0); }
