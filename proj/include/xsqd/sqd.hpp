#pragma once

// Super quantum discord (weak measurement on B) and ordinary quantum
// discord of X-states, plus the closed forms for the Werner and
// Bell-diagonal families.

#include <vector>

#include "xsqd/weakmeas.hpp"

namespace xsqd {

struct MinimizerConfig {
  int grid_points = 2048;
  double refine_tolerance = 1e-10;
  int max_refine_iters = 200;
  // Number of best grid points handed to the local refinement.
  int refine_starts = 8;

  void validate() const;
};

struct SQDResult {
  double value = 0.0;
  MeasurementDirection direction;
  double s_w_min = 0.0;
  double p_plus = 0.5;
  double p_minus = 0.5;
  double s_b = 0.0;
  double s_ab = 0.0;
  bool projective = false;
};

struct DirectionMinimum {
  MeasurementDirection direction;
  double value = 0.0;
};

// +-e1, +-e2, +-e3.
std::vector<MeasurementDirection> candidate_directions();

// Deterministic, roughly uniform covering of the unit sphere.
std::vector<MeasurementDirection> fibonacci_sphere(int n);

double avg_conditional_entropy(const CorrelationParams& cp, const MeasurementDirection& z,
                               WeakStrength x);

// Minimum over the axis candidates only.
DirectionMinimum minimize_over_candidates(const CorrelationParams& cp, WeakStrength x);

DirectionMinimum minimize_conditional_entropy(const CorrelationParams& cp, WeakStrength x,
                                              const MinimizerConfig& cfg = {});

SQDResult super_discord(const XState& s, WeakStrength x, const MinimizerConfig& cfg = {});
SQDResult quantum_discord(const XState& s, const MinimizerConfig& cfg = {});

double werner_sqd_closed_form(double z, WeakStrength x);
double bell_diagonal_sqd_closed_form(double c1, double c2, double c3, WeakStrength x);

}  // namespace xsqd
