#pragma once

// Property-verification harness: seeded random trials of every identity the
// library implements, aggregated into deterministic reports.

#include "sjk/numkit.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sjk {

inline constexpr const char* kSuiteNames[] = {
    "group-axioms",      "theta-hom",           "compat-29",
    "compat-37",         "hc-reconstruct",      "metric-invariance",
    "laplacian-invariance", "cocycle",          "volume-invariance"};

bool is_suite_name(const std::string& name);  // includes "all"

struct VerifyOptions {
  std::string suite;
  int g = 1;
  int h = 1;
  int trials = 100;
  std::uint64_t seed = 42;
  /// Replaces every per-check tolerance when set.
  std::optional<double> tol;
  /// 0 picks the hardware concurrency; results never depend on it.
  int threads = 1;

  void validate() const;
};

inline constexpr int kMaxListedFailures = 100;

struct TrialFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string check;
  std::optional<double> residual;  // empty when the trial raised an error
  std::string error;
};

struct CheckSummary {
  int count = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
};

struct SuiteReport {
  std::string suite;
  int g = 0;
  int h = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::map<std::string, CheckSummary> checks;
  /// Largest residual over all checks, each rescaled to the headline
  /// tolerance (residual·tolerance/check_tolerance), so that
  /// max_residual ≤ tolerance exactly when every check is within its own.
  double max_residual = 0.0;
  double tolerance = 0.0;
  int failure_count = 0;
  /// The first kMaxListedFailures failures in trial order.
  std::vector<TrialFailure> failures;
  bool passed = false;
  /// Smallest PD margin among all points produced by actions and maps;
  /// empty for suites that produce no points.
  std::optional<double> min_pd_margin;
  int domain_violations = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<SuiteReport> suites;  // one entry, or one per suite for "all"
  bool passed = false;
};

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts);
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace sjk
