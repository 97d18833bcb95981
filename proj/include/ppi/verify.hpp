#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppi/element.hpp"
#include "ppi/oracle.hpp"

namespace ppi {

struct VerifyConfig {
  /// Block index bound for the pi/matrix-unit suites; 0 picks the suite default.
  unsigned n = 0;
  /// Index bound for the shift-pair suites; 0 picks the suite default.
  unsigned m = 0;
  /// Random samples for sampled suites; 0 picks the suite default.
  std::size_t samples = 0;
  /// Longest word drawn or enumerated; 0 picks the suite default.
  std::size_t max_length = 0;
  std::uint64_t seed = 1;
  OracleConfig oracle;
  /// Run checks on an OpenMP team.
  bool parallel = true;
};

/// Where and how a failing relation shows up.
struct Witness {
  std::string element;  // lhs - rhs
  std::string rep;
  std::size_t leg = 0;
  QMatrix difference;
};

struct CheckResult {
  std::string claim;
  std::vector<std::pair<std::string, long>> params;
  bool pass = false;
  std::optional<Witness> witness;
  /// Free-form note for checks whose failure is not an element difference.
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  VerifyConfig config;
  double wall_seconds = 0.0;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Registered suite names in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs a suite. Throws UnknownSuite for names not in suite_names().
VerifyReport run_suite(const std::string& name, const VerifyConfig& config = {});

/// Every normal word with at most `max_letters` letters.
std::vector<NormalWord> normal_words(std::size_t max_letters);

/// An oracle-equality check with a witness on failure.
CheckResult equality_check(std::string claim, std::vector<std::pair<std::string, long>> params, const Element& lhs,
                           const Element& rhs, std::span<const Rep> reps);
CheckResult equality_check(std::string claim, std::vector<std::pair<std::string, long>> params, const Element& lhs,
                           const Element& rhs, const OracleConfig& oracle);

}  // namespace ppi
