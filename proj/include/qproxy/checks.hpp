#pragma once

#include "qproxy/analysis.hpp"

namespace qproxy {

// Acceptance criteria, one runner per numbered criterion.  `fast` trades grid
// resolution for speed where the criterion allows it; tolerances themselves
// never change.  `tol_tighten` (< 1) applies only to algebraic identities
// (the strict profile), not to quadrature-limited bounds.
std::vector<CheckRecord> criterion_energy_closed_form();              // 1
std::vector<CheckRecord> criterion_oracle_equivalence(bool fast);     // 2
std::vector<CheckRecord> criterion_conservation(bool fast);           // 3
std::vector<CheckRecord> criterion_sign_structure(bool fast);         // 4
std::vector<CheckRecord> criterion_latency();                         // 5
std::vector<CheckRecord> criterion_proxy_convergence(bool fast);      // 6
std::vector<CheckRecord> criterion_limits();                          // 7
std::vector<CheckRecord> criterion_velocity_theorem(bool fast);       // 8
std::vector<CheckRecord> criterion_nonrel();                          // 9
std::vector<CheckRecord> criterion_dirac(bool fast, double tol_tighten = 1.0);  // 10
std::vector<CheckRecord> criterion_determinism();                     // 11

std::vector<CheckRecord> run_criterion(int n, bool fast, double tol_tighten = 1.0);

// suite: "fast" (coarse normalization + identities, < 60 s) or "full" (all
// acceptance criteria).  tol_profile: "default" or "strict" (identities 10x).
AnalysisReport run_checks(const std::string& suite,
                          const std::string& tol_profile = "default");

}  // namespace qproxy
