#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "lfp/errors.hpp"

namespace lfp {

inline constexpr const char* kReportSchema = "ehrhart-lf/1";

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitBudget = 3 };

/// A finished report plus the process exit status it implies.
struct Outcome {
  nlohmann::ordered_json report;
  int exit_code = kExitOk;
};

enum class EhrhartMode { formula, interp, both };

struct GenerateSpec {
  std::size_t dim = 3;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

struct VerifyRequest {
  /// Exactly one of the two inputs is used.
  std::optional<std::string> input_text;
  std::optional<GenerateSpec> generate;
  /// main2, fdecomp, gsigma, det2, zero5, reciprocity or all.
  std::string suite = "all";
};

Outcome cmd_check(const std::string& input_text);
Outcome cmd_ehrhart(const std::string& input_text, EhrhartMode mode, unsigned long long budget = kDefaultBudget);
Outcome cmd_decompose(const std::string& input_text, unsigned long long budget = kDefaultBudget);
Outcome cmd_verify(const VerifyRequest& request, unsigned long long budget = kDefaultBudget);

/// Usage-level failure reported in the standard envelope (exit 2).
Outcome usage_error(const std::string& command, const std::string& message);

}  // namespace lfp
