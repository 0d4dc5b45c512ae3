#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "resint/obstruction.hpp"
#include "resint/resonance.hpp"
#include "resint/verifier.hpp"

namespace resint {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Header shared by every report: schema, tool, version, command.
Json report_header(const std::string& command);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const ObstructionVerdict& v, bool with_certificate);
Json to_json(const FixedPointReport& r);
Json to_json(const ResonanceLattice& l);
Json to_json(const Theorem1Bound& b);
Json to_json(const IntegralCheck& c);
Json to_json(const IndependenceReport& r);
Json to_json(const OrbitCheck& o);
Json to_json(const AlgebraicPoint& p);

/// Serialized form without the top-level "timing" member.
std::string canonical_dump(const Json& report);

// ---- analysis driver ------------------------------------------------------

struct AnalyzeOptions {
  std::vector<ParamConstraint> constraints;
  int bound = kDefaultExponentBound;
  int factor_budget = 6;
  bool with_certificate = false;
  std::optional<std::vector<Rational>> fixed_point;  // restrict to this point
};

struct AnalyzeResult {
  VerdictKind overall = VerdictKind::Inconclusive;
  std::vector<Rational> params;  // CandidateParams overall
  Json report;
};

/// Enumerates certified fixed points, runs the applicable pipelines and
/// aggregates: Excluded at any fixed point excludes the map.
AnalyzeResult analyze_map(const RationalMap& f, const AnalyzeOptions& options);

}  // namespace resint
