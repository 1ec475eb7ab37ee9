#pragma once

// Named property checks grouped into suites, run at a chosen scale.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace walklab {

enum class Scale { quick, full };

Scale parse_scale(std::string_view text);  // throws ParseError
// WALKLAB_SCALE overrides `fallback` when set.
Scale scale_from_env(Scale fallback);

struct Bounds {
  std::uint64_t walk;      // 10^5 quick, 10^7 full
  std::uint64_t automata;  // 10^4 quick, 10^5 full
};

Bounds bounds_for(Scale scale);

struct Check {
  std::string suite;
  std::string name;
  bool conjectural = false;
  // Returns a short summary; throws on failure.
  std::function<std::string(const Bounds&)> body;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  bool conjectural = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> results;  // sorted by suite, then name

  // Conjectural checks do not count.
  bool ok() const;
  const CheckResult* first_failure() const;
};

// walk, automata, substitution, recurrences, numeration
const std::vector<std::string>& suite_names();

std::vector<Check> standard_checks();

// `suite` is "all" or one of suite_names(); throws ParseError otherwise.
VerifyReport run_checks(const std::vector<Check>& checks, std::string_view suite, const Bounds& bounds);

// One "suite.name: pass (detail)" line per check and a closing ok/failed line,
// or a JSON document.
void write_report(std::ostream& os, const VerifyReport& report, bool json);

}  // namespace walklab
