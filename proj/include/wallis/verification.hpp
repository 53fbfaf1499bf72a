// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wallis/quadrature.hpp"
#include "wallis/series_catalog.hpp"
#include "wallis/transform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallis {

struct KnownConstant {
  std::string label;
  double value;
  std::string provenance;
};

/// One verification case: a catalog entry routed through the matching
/// transform and compared against the quadrature oracle. suspected_typo
/// marks the two cases whose printed closed form disagrees with the oracle
/// (9: a dropped leading term; 12: a dropped alternating sign).
struct ApplicationCase {
  int id = 0;
  std::string series_name;
  Parity route = Parity::even;
  std::string result_form;  // closed form of the transformed series
  std::optional<KnownConstant> known_constant;
  bool suspected_typo = false;
};

const std::vector<ApplicationCase>& application_cases();
const ApplicationCase& application_case(int id);

struct CaseResult {
  int id = 0;
  std::string name;
  double series_value = 0.0;
  double series_tail = 0.0;
  double oracle_value = 0.0;
  double oracle_error = 0.0;
  double abs_diff = 0.0;
  bool pass = false;
  std::string notes;
  std::size_t terms_used = 0;
  std::size_t evaluations = 0;
  double runtime_ms = 0.0;
};

struct BaselResult {
  double odd_squares_sum = 0.0;  // sum of reciprocal odd squares via the transform
  double odd_squares_tail = 0.0;
  double pi2_over_8 = 0.0;
  double basel_value = 0.0;  // (4/3) x odd_squares_sum
  double pi2_over_6 = 0.0;
  double abs_diff = 0.0;  // |basel_value - pi^2/6|
  bool simplification_ok = false;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct SweepResult {
  double max_abs_diff = 0.0;
  double bound = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  double tolerance = 0.0;
  std::vector<CaseResult> cases;  // ordered by id
  BaselResult basel;
  SweepResult symmetry;  // sin route vs cos route, all catalog entries
  SweepResult wallis;    // quadrature of sin^m vs the exact ratios, m <= 41
  int passed = 0;
  int failed = 0;
  bool all_pass = false;
  double runtime_ms = 0.0;
};

struct VerifyOptions {
  EngineOptions engine;
  int level_cap = 12;
  bool parallel = false;  // cases are independent; report order is fixed
};

/// Run one case. Engine or oracle failures become a failed row, never a
/// throw. A row passes iff |series - oracle| <= series_tail + oracle_error
/// + 1e-12.
CaseResult run_application(int id, double tol, const VerifyOptions& opts = {});

/// The odd-squares sum through the arcsin route, checked to simplify to
/// 1/(2k+1)^2 exactly for k <= 50, then scaled by 4/3 and compared with
/// pi^2/6.
BaselResult basel_derivation(double tol, const VerifyOptions& opts = {});

/// All 14 cases plus the Basel derivation and the two sweeps.
VerificationReport run_all(double tol, const VerifyOptions& opts = {});

/// JSON object {suite: {...}, cases: [{id, name, series_value, series_tail,
/// oracle_value, oracle_error, abs_diff, pass, notes, ...}]}. With
/// include_timing = false all runtime fields are omitted, making the bytes
/// reproducible across runs.
std::string report_json(const VerificationReport& report, bool include_timing = true);

/// Fixed-width text table of the same numbers.
std::string report_table(const VerificationReport& report);

}  // namespace wallis
