#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lfp/rational.hpp"

namespace lfp {

/// Outcome of an exact invariant check over one or more cases.
struct VerifyReport {
  std::string check;
  std::size_t cases = 0;
  /// Named quantities worth echoing, e.g. both sides of an identity.
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }

  void merge(const VerifyReport& other) {
    cases += other.cases;
    for (const auto& v : other.violations) violations.push_back(other.check + ": " + v);
  }
};

}  // namespace lfp
