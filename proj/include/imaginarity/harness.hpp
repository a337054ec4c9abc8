#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace imag {

/// claim: the statement as given. corrected: a replacement for a claim that
/// does not hold as stated.
enum class CheckKind { claim, corrected };

std::string to_string(CheckKind k);

struct Counterexample {
  nlohmann::ordered_json input;
  nlohmann::ordered_json observed;
};

struct CheckReport {
  std::string check_id;
  CheckKind kind = CheckKind::claim;
  long trials = 0;
  long failures = 0;
  /// Largest raw excess max(0, lhs - rhs) (or |lhs - rhs| for identities).
  /// A trial fails when its excess exceeds `tolerance`.
  double worst_violation = 0.0;
  double tolerance = 0.0;
  std::vector<Counterexample> counterexamples;  // at most 10
  long elapsed_ms = 0;
  /// Extra observations that never affect pass/fail.
  nlohmann::ordered_json telemetry = nlohmann::ordered_json::object();

  bool passed() const { return failures == 0; }
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  /// Overrides the per-check default trial count when > 0.
  long trials = 0;
  /// check_id -> tolerance.
  std::map<std::string, double> tolerance_overrides;
  std::vector<std::size_t> dims{2, 4};
  std::vector<double> alpha_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> beta_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  /// Offsets t in [0, 1): z = zmin + t (0.99 - zmin) with zmin = max(alpha, 1 - alpha).
  std::vector<double> z_fractions{0.0, 0.25, 0.5, 0.75};
  /// When false elapsed_ms is always 0, so reports are byte-reproducible.
  bool record_timing = true;

  /// Throws ParamOutOfRange on illegal grids or dims.
  void validate() const;
};

struct CheckInfo {
  std::string id;
  CheckKind kind;
  std::string statement;
};

/// Registered checks in execution order.
const std::vector<CheckInfo>& check_registry();

/// Throws UnknownCheck for an unregistered id.
CheckReport run_check(const std::string& check_id, const SuiteConfig& cfg);

std::vector<CheckReport> run_all(const SuiteConfig& cfg);

/// One JSON object, fixed key order, no trailing newline.
std::string to_json_line(const CheckReport& r);

}  // namespace imag
