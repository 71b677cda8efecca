#pragma once

// Named verification results. Every suite in the library returns a list of
// these; the report layer only orders and serializes them.

#include "json.hpp"

#include <string>
#include <vector>

namespace charrig {

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "fail";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  nlohmann::json witness;  // null when there is nothing worth recording

  bool passed() const { return status != CheckStatus::kFail; }
};

using CheckList = std::vector<Check>;

inline Check make_check(std::string name, bool ok, std::string detail = {},
                        nlohmann::json witness = nullptr) {
  return {std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail),
          std::move(witness)};
}

inline bool all_passed(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

inline void append(CheckList& into, CheckList more) {
  for (auto& c : more) into.push_back(std::move(c));
}

}  // namespace charrig
