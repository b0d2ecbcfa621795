#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "terracini/fields.hpp"

namespace terracini {

struct SuiteOptions {
  std::uint64_t seed = 0;
  Field field = Field::prime(32003);
  std::optional<std::uint64_t> max_minors;
  bool parallel = false;
};

struct CaseResult {
  std::string name;
  std::string anchor;  // the classification statement the case replays
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool passed() const;
  // One line per case, then a summary line.
  std::string table() const;
};

// "curves", "delpezzo", "veronese", "segre-veronese", "properties".
const std::vector<std::string>& suite_names();

// Throws PreconditionError for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace terracini
