#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "monometric/quadrature.hpp"

namespace monometric {

enum class Relation { AtMost, AtLeast, Above };

/// One checked property: `value` is the worst case found, compared against
/// `threshold` with `relation` (value <= threshold, value >= threshold, or
/// value > threshold).
struct PropertyResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  Relation relation = Relation::AtMost;
  double threshold = 0.0;
  int samples = 0;
  bool passed = false;
};

struct VerifyOptions {
  std::string suite = "all";  // monotone | chentsov | metric | channels | all
  int trials = 200;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims = {2, 3, 4, 5};
  /// "square": add f(t) = t^2 to the operator-monotone check.
  /// "bad-c": add a non-monotone c to the channel contraction check.
  std::vector<std::string> injections;
  QuadratureConfig quad;
};

struct VerificationReport {
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims;
  std::vector<std::string> injections;
  std::vector<PropertyResult> properties;
  double wall_time_seconds = 0.0;

  bool passed() const;
};

/// Property names each suite reports, in report order ("all" concatenates
/// the four suites).
const std::vector<std::string>& suite_properties(const std::string& suite);

/// Runs the named suite(s) in fixed order. InvalidArgument for an unknown
/// suite or injection name.
VerificationReport run_verification(const VerifyOptions& options);

/// Deterministic JSON form; wall time is included only on request so that
/// identical runs give identical bytes.
nlohmann::json report_to_json(const VerificationReport& report, bool include_timing = false);

/// The deliberately invalid c used by the "bad-c" injection and the
/// falsification property: symmetric and homogeneous but above the largest
/// monotone c off the diagonal.
double oversized_mc_function(double x, double y);

}  // namespace monometric
