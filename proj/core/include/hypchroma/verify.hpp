#pragma once

// Verification suites: the closed forms against independent constructions,
// the shipped surfaces against their audits, and the shipped rotation
// systems against face tracing.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hypchroma/report.hpp"

namespace hypchroma {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::filesystem::path data_dir;  // empty: default_data_dir()
  std::optional<std::filesystem::path> k4;
  std::optional<std::filesystem::path> k7;
  std::optional<std::filesystem::path> k12;
};

/// HYPCHROMA_DATA_DIR from the environment, else the directory configured
/// at build time.
std::filesystem::path default_data_dir();

std::vector<std::string> verify_suites();

/// Runs one suite ("formulas", "surfaces", "rotations") or "all". Throws
/// invalid-input for unknown suites.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options = {});

/// {passed, total, failures: [{suite, name, detail}], checks: [...]}.
Json to_json(const std::vector<CheckResult>& results);

}  // namespace hypchroma
