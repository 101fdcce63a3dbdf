#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterf/corpus.hpp"
#include "clusterf/json_io.hpp"

namespace clusterf {

enum class Suite { Formulas, Quantum, Folding, Polygon };

std::string suite_name(Suite s);
/// "formulas", "quantum", "folding", "polygon" or "all".
std::vector<Suite> suites_from_string(const std::string& s);

/// One failed comparison, keyed so that sorting puts the smallest case first.
struct Mismatch {
  std::size_t rank = 0;
  std::string type;
  std::size_t orientation = 0;
  RootVector d;
  RootVector e;
  std::string arrows;
  std::string detail;

  friend auto operator<=>(const Mismatch&, const Mismatch&) = default;
};

struct SuiteResult {
  Suite suite;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;  // sorted

  bool ok() const { return mismatches.empty(); }
};

struct VerifyOptions {
  std::size_t max_rank = 4;
  bool parallel = true;
  /// Scales used for the quantum suite.
  std::vector<int> d_scales{1, 2};
  std::size_t polygon_sequences = 100;
  std::size_t polygon_max_length = 20;
  std::uint32_t rng_seed = 20240607;
  std::size_t orbit_sequence_steps = 12;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool ok() const;
  /// Smallest mismatch over all suites, or nullptr.
  const Mismatch* counterexample() const;
};

SuiteResult verify_formulas(const VerifyOptions& opt);
SuiteResult verify_quantum(const VerifyOptions& opt);
SuiteResult verify_folding_suite(const VerifyOptions& opt);
SuiteResult verify_polygon(const VerifyOptions& opt);

VerifyReport run_verify(const std::vector<Suite>& suites, const VerifyOptions& opt);

/// Canonical report; identical for serial and parallel runs.
Json verify_report_to_json(const VerifyReport& r);

}  // namespace clusterf
