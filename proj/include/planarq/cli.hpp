#pragma once

// Subcommand drivers behind the planarq tool. Each returns the report text and
// an exit code: 0 all checks pass, 1 usage or configuration error, 2 a
// mathematical disagreement.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planarq/families.hpp"

namespace planarq::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kUsage = 1, kDisagreement = 2 };

enum class Format { Json, Csv };

struct RunConfig {
  std::string subcommand;  // scan | verify | identities | families
  std::string action;      // families: list | check
  std::optional<std::uint32_t> p;
  std::optional<unsigned> m;
  std::string methods = "theorem,det";
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  Format format = Format::Json;
  std::optional<std::uint64_t> A, B, C;
  std::vector<std::uint32_t> mid_modulus, top_modulus;  // low degree first
  std::uint64_t budget = 20000;  // largest field brute-forced by verify and families
  std::string fault;             // identities only: "det-sign" tampers with the check
  families::FamilySpec family;   // id "all" checks the whole catalog
};

struct Outcome {
  int exit_code = kPass;
  std::string report;
  std::string diagnostics;  // timing and progress, kept out of the report
};

Outcome cmd_scan(const RunConfig& config);
Outcome cmd_verify(const RunConfig& config);
Outcome cmd_identities(const RunConfig& config);
Outcome cmd_families(const RunConfig& config);

/// Dispatches on config.subcommand. planarq::Error becomes kUsage with the
/// message as the report.
Outcome run(const RunConfig& config);

/// "1,0,2" -> {1, 0, 2}. Throws planarq::Error on malformed input.
std::vector<std::uint32_t> parse_coefficients(const std::string& text);

}  // namespace planarq::cli
