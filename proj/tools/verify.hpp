#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json_format.hpp"

namespace bvtorus::cli {

struct CheckResult {
  std::string identity;
  std::size_t cases = 0;
  std::size_t failures = 0;
  Json detail = Json::object();

  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  Json extra = Json::object();

  bool passed() const;
  Json to_json() const;
};

struct SuiteOptions {
  std::optional<std::size_t> rank;
  std::uint64_t seed = 1;
  std::int64_t window = 2;
  std::size_t samples = 200;
  std::int64_t grid = 8;
  std::int64_t max_n = 6;
};

SuiteReport verify_bv_axioms(const SuiteOptions& opts);
SuiteReport verify_embedding(const SuiteOptions& opts);
SuiteReport verify_cocycles(const SuiteOptions& opts);
SuiteReport verify_rep_classification(const SuiteOptions& opts);
SuiteReport verify_floer(const SuiteOptions& opts);

/// Dispatch by suite name; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
const std::vector<std::string>& suite_names();

}  // namespace bvtorus::cli
