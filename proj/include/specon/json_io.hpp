#pragma once

// JSON encodings of configurations and reports, and the run manifest that
// accompanies every output file.
//
// Inputs:
//   {"endpoints": [x1, ..., x2n]}
//   {"gaps": [a1, ..., a_{2n-1}]}
//   {"pieces": [{"lo": .., "hi": .., "value": ..}, ...]}

#include <cstdint>
#include <string>

#include <json.hpp>

#include "specon/bounds.hpp"
#include "specon/intervals.hpp"
#include "specon/search.hpp"
#include "specon/spectral.hpp"

namespace specon {

/// Bumped on any breaking change of a report layout.
inline constexpr const char* kArtifactVersion = "1.0.0";

nlohmann::json to_json(const IntervalUnion& a);
nlohmann::json to_json(const GapVector& g);
nlohmann::json to_json(const StepFunction& f);
nlohmann::json to_json(const ConcentrationResult& c);
nlohmann::json to_json(const HBreakdown& h);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const CertificateVerdict& v);
nlohmann::json to_json(const SuperlevelReport& s);
nlohmann::json to_json(const SearchConfig& c);
nlohmann::json to_json(const RestartOutcome& r);
nlohmann::json to_json(const MinimizeResult& m);
nlohmann::json to_json(const ScanConfig& c);
nlohmann::json to_json(const ScanReport& s);
nlohmann::json to_json(const Remark1Config& c);
nlohmann::json to_json(const Remark1Result& r);
nlohmann::json to_json(const SubCheck& c);
/// Rows are left out; they go to CSV.
nlohmann::json to_json(const BoundReport& r);

/// Accepts either {"endpoints"} or {"gaps"}. Throws std::invalid_argument.
IntervalUnion union_from_json(const nlohmann::json& j);
/// Accepts {"gaps"}, or {"endpoints"} converted through the canonical form.
GapVector gaps_from_json(const nlohmann::json& j);
StepFunction step_from_json(const nlohmann::json& j);

struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::string artifact_version = kArtifactVersion;
  std::uint64_t seed = 0;
  std::string started;
  std::string finished;
};

nlohmann::json to_json(const RunManifest& m);

/// Current UTC time as ISO 8601 with seconds.
std::string utc_timestamp();

/// Non-finite doubles become the strings "inf", "-inf", "nan" so that reports
/// stay valid JSON.
nlohmann::json number(double x);

}  // namespace specon
