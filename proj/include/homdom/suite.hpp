#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homdom/errors.hpp"

namespace homdom {

/// Malformed config file or unresolvable identifier.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class CheckPath { exact, floating, both };

struct CheckSpec {
  std::string id;
  std::string kind;  ///< invariance, transitivity, levi, chern_moser, lie, line_witness, closure, rank
  std::string target;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  CheckPath path = CheckPath::both;
  int criterion = 0;        ///< acceptance criterion tag, 0 if untagged
  bool expect_reject = false;
  int line = 0;

  bool exact_path() const { return path != CheckPath::floating; }
  bool float_path() const { return path != CheckPath::exact; }
};

struct SuiteConfig {
  std::string source;
  std::vector<CheckSpec> checks;
};

/// Blocks of the form
///   [check <id>]
///   kind = invariance
///   target = gamma(alpha=1/12)
///   key = value
/// Lines starting with '#' are comments. Throws ConfigError.
SuiteConfig parse_config(std::istream& in, const std::string& source = "<config>");
SuiteConfig load_config(const std::string& path);

const std::vector<std::string>& check_kinds();

enum class CheckStatus { pass, fail, error };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string kind;
  std::string target;
  int criterion = 0;
  CheckStatus status = CheckStatus::error;
  nlohmann::json details;
  std::string message;
  double wall_time_ms = 0.0;
};

/// Runs one check; exceptions become status = error.
CheckResult run_check(const CheckSpec& spec);

struct RunOptions {
  unsigned jobs = 1;
  bool fail_fast = false;
  std::optional<std::uint64_t> seed_override;
};

struct SuiteReport {
  std::vector<CheckResult> results;  ///< sorted by check id
  std::size_t skipped = 0;           ///< not run because of --fail-fast

  bool all_pass() const;
  std::size_t count(CheckStatus s) const;
};

SuiteReport run_suite(const SuiteConfig& config, const RunOptions& options = {});

nlohmann::json to_json(const CheckResult& r, bool include_timing = true);
/// One JSON object per line.
std::string to_ndjson(const SuiteReport& report, bool include_timing = true);
std::string to_markdown(const SuiteReport& report);

}  // namespace homdom
