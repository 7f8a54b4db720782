#pragma once

// Exhaustive desk-scale checks of the MOD_q, symmetric, nondegeneracy,
// composite-modulus, Hilbert-function and residue results. Each suite runs a
// parameter grid, fans cells out to a worker pool and reports the first
// failing cell in grid order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace imm {

struct VerifyOptions {
  int max_n = 10;
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::vector<int> qs{2, 3, 4, 5, 6, 7};
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  /// Negative control: flips one truth-table bit in the not-MOD_q suite.
  bool inject_fault = false;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  /// The statement being checked, quoted.
  std::string statement;
  /// Observation-level check rather than a theorem.
  bool observation = false;
  bool passed = true;
  std::size_t cells = 0;
  /// First failing cell in grid order, empty on success.
  std::string failure;
  /// Extra per-suite report lines (gap table, residue measurements, ...).
  std::vector<std::string> details;
  double seconds = 0;
};

/// Runs body(i) for i in [0, count) on `jobs` threads. Exceptions are caught
/// per index and returned as messages (empty string = no exception).
std::vector<std::string> parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

SuiteResult suite_not_mod_exact(const VerifyOptions& o);
/// Also fills `gaps` with one line per (n, q, p) cell: chi immunity - floor((n+1)/2).
SuiteResult suite_mod_lower_and_tight(const VerifyOptions& o, std::vector<int>* gaps = nullptr);
SuiteResult suite_gap_observation(const VerifyOptions& o, const std::vector<int>& gaps);
SuiteResult suite_symmetrization(const VerifyOptions& o, int per_cell = 200);
SuiteResult suite_psi_basis(const VerifyOptions& o);
SuiteResult suite_tensor(const VerifyOptions& o, int max_size = 3, int random_pairs = 50);
SuiteResult suite_composite(const VerifyOptions& o, int random_n3 = 100);
SuiteResult suite_hilbert(const VerifyOptions& o, int random_n4 = 500);
SuiteResult suite_residue(const VerifyOptions& o);
SuiteResult suite_symmetric_transforms(const VerifyOptions& o, int instances = 100);

/// All suites in order; `--max-n` below 10 shrinks every grid.
std::vector<SuiteResult> verify_all(const VerifyOptions& o);

}  // namespace imm
