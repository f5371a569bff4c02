#pragma once

#include <string>
#include <vector>

#include "bohr/abscissa.hpp"
#include "bohr/zeta_kernels.hpp"

namespace bohr {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Deterministic summary of the measured quantities (no timings).
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionOutcome> criteria;
  bool all_passed() const noexcept;
};

/// Runs the nine end-to-end checks on the published constants, the kernels
/// against brute-force oracles, the lattice construction and the lift.
/// `digits` controls how numbers appear in the detail strings.
AcceptanceReport run_acceptance(const TruncationPolicy& policy = {}, double tol = kDefaultSolverTol,
                                int digits = 10);

}  // namespace bohr
