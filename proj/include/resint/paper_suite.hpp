#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resint/report.hpp"

namespace resint {

struct GoldenCheck {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteResult {
  std::vector<GoldenCheck> checks;
  bool pass = false;
  Json report;
};

std::vector<std::string> golden_check_ids();

/// Runs every worked example end to end and compares with embedded golden
/// values. `corrupt` replaces the golden value of that check (harness self-test).
/// `maps_dir` holds the example map files.
SuiteResult reproduce_paper(const std::string& maps_dir, const std::optional<std::string>& corrupt = std::nullopt);

}  // namespace resint
