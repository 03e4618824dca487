#pragma once

// Brute-force reference path. Everything here goes through dense operator
// algebra on the 4x4 density matrix and a covering of the unit 3-sphere of
// basis unitaries; no closed-form eigenvalue expression is used.

#include <cstdint>
#include <vector>

#include "xsqd/weakmeas.hpp"

namespace xsqd {

struct OracleConfig {
  int unitary_grid = 20000;
  bool refine = true;
  std::uint64_t seed = 0;
  // Best grid points handed to the local refinement when refine is set.
  int refine_starts = 4;

  void validate() const;
};

struct OracleResult {
  double value = 0.0;
  UnitaryParams argmin;
  double s_w_min = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
};

// Generic Hermitian eigensolve of the dense matrix, descending.
std::array<double, 4> dense_spectrum(const Matrix4c& m);

// Partial traces of a dense two-qubit operator.
Matrix2c partial_trace_b(const Matrix4c& m);
Matrix2c partial_trace_a(const Matrix4c& m);

ConditionalEnsemble conditional_ensemble_direct(const XState& s, const UnitaryParams& u,
                                                WeakStrength x);

// Weighted conditional entropy of A after the weak measurement in basis u.
double oracle_objective(const XState& s, const UnitaryParams& u, WeakStrength x);

// Seeded low-discrepancy covering of the unit 3-sphere.
std::vector<UnitaryParams> unitary_covering(int n, std::uint64_t seed);

OracleResult sqd_bruteforce(const XState& s, WeakStrength x, const OracleConfig& cfg = {});

}  // namespace xsqd
