#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isoed {

struct OracleOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 20240601;
  std::size_t max_dim = 6;   // largest matrix side; products use g <= min(3, max_dim / 2)
  long max_entry = 20;
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Instances checked for lower <= upper <= dim A, and how many broke it.
  std::size_t ordering_checks = 0;
  std::size_t ordering_violations = 0;
  std::vector<std::string> failure_notes;  // first few failures, for diagnosis
};

/// SNF invariant factors against determinantal-divisor ratios, plus U M V = S
/// with unimodular U, V.
SuiteResult snf_suite(const OracleOptions& options);
/// kernel_intersect on every sub-product against the direct sum of block kernels.
SuiteResult kernel_splitting_suite(const OracleOptions& options);
/// lower <= upper <= dim A on dense and block-diagonal isogenies of arbitrary degree.
SuiteResult ordering_suite(const OracleOptions& options);
/// lower = upper = exact on block-diagonal isogenies whose degree only has primes > dim A.
SuiteResult coprime_suite(const OracleOptions& options);

std::vector<SuiteResult> run_oracle(const OracleOptions& options);

/// Deterministic text report of an oracle run.
std::string render_oracle_text(const OracleOptions& options, const std::vector<SuiteResult>& suites);

bool oracle_passed(const std::vector<SuiteResult>& suites);

}  // namespace isoed
