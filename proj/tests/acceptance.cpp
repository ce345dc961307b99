// Acceptance gate: one pass/fail line per criterion.  With no arguments all
// eleven criteria run; a single numeric argument runs just that criterion.
// Exit code 0 iff every executed criterion passed.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qproxy/checks.hpp"

namespace {

const char* kTitles[11] = {
    "energy closed form (E = hbar c / sqrt(2 pi dx^2), 1e-8 rel)",
    "oracle equivalence (closed psi 1e-8 / phi 1e-7 vs quadrature)",
    "conservation suite (norm, charge, energy at five times, four specs, 1e-6)",
    "sign structure (born, H >= 0; H~, rho negative only outside the cone)",
    "latency (cone offsets in (0, dx]; H centered within 0.5 dx)",
    "proxy convergence at k0 = 10 (divergence <= 5e-3, Gaussian within 1%)",
    "limits (nonrelativistic 2e-3; narrow packet 2e-2)",
    "velocity theorem (v = c^2 p / E within 1%, k0 in {0.1, 1, 10})",
    "nonrelativistic densities (h_n norm, h_0 peaks, h~ sign, variance)",
    "Dirac (spinor orthonormality 1e-12; rho/q = |psi|^2; H_phi = H~)",
    "determinism (byte-identical repeated runs)",
};

bool run_one(int n) {
  std::vector<qproxy::CheckRecord> recs;
  try {
    recs = qproxy::run_criterion(n, /*fast=*/false);
  } catch (const std::exception& e) {
    std::printf("[FAIL] criterion %d: %s -- exception: %s\n", n, kTitles[n - 1],
                e.what());
    return false;
  }
  bool ok = true;
  std::size_t passed = 0;
  for (const qproxy::CheckRecord& r : recs) {
    if (r.pass) {
      ++passed;
    } else {
      ok = false;
    }
  }
  std::printf("[%s] criterion %d: %s (%zu/%zu checks)\n", ok ? "PASS" : "FAIL",
              n, kTitles[n - 1], passed, recs.size());
  for (const qproxy::CheckRecord& r : recs) {
    if (!r.pass)
      std::printf("       failed %s: measured=%.9g expected=%.9g tol=%.3g%s%s\n",
                  r.name.c_str(), r.measured, r.expected, r.tol,
                  r.note.empty() ? "" : "  # ", r.note.c_str());
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1-11]\n", argv[0]);
    return 2;
  }
  if (argc == 2) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1-11]\n", argv[0]);
      return 2;
    }
    which.push_back(n);
  } else {
    for (int n = 1; n <= 11; ++n) which.push_back(n);
  }

  bool all_ok = true;
  for (int n : which) all_ok &= run_one(n);
  return all_ok ? 0 : 1;
}
