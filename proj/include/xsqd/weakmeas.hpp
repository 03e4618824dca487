#pragma once

// Weak measurements on subsystem B and the conditional ensemble they leave
// on subsystem A.

#include <utility>

#include "xsqd/qstate.hpp"

namespace xsqd {

// Measurement strength x >= 0. The projective sentinel stands for the
// x -> infinity limit and carries tanh x = 1 exactly.
class WeakStrength {
 public:
  static WeakStrength of(double x);
  static WeakStrength projective() noexcept { return WeakStrength(0.0, true); }

  bool is_projective() const noexcept { return projective_; }
  // Finite strength; +infinity for the projective sentinel.
  double x() const noexcept;
  double tanh() const noexcept;
  // 1 - tanh x, computed without cancellation for large x.
  double one_minus_tanh() const noexcept;

 private:
  WeakStrength(double x, bool projective) : x_(x), projective_(projective) {}

  double x_;
  bool projective_;
};

struct MeasurementDirection {
  double z1 = 0.0;
  double z2 = 0.0;
  double z3 = 1.0;

  // Throws DomainError unless the vector has unit norm within 1e-12.
  static MeasurementDirection checked(double z1, double z2, double z3);
  // Rescales any nonzero vector onto the sphere.
  static MeasurementDirection normalized(double z1, double z2, double z3);
};

// V = t I + i (y1 sigma1 + y2 sigma2 + y3 sigma3).
struct UnitaryParams {
  double t = 1.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;

  static UnitaryParams checked(double t, double y1, double y2, double y3);
  static UnitaryParams normalized(double t, double y1, double y2, double y3);

  Matrix2c matrix() const;
};

struct ConditionalEnsemble {
  double p_plus = 0.5;
  double p_minus = 0.5;
  // Spectrum of the conditional state after the +x outcome.
  double lambda_plus = 0.5;
  double lambda_minus = 0.5;
  // Spectrum after the -x outcome.
  double lambda_plus_prime = 0.5;
  double lambda_minus_prime = 0.5;
  // Set when the branch has probability below 1e-14; its spectrum is then
  // meaningless and contributes nothing to the conditional entropy.
  bool plus_degenerate = false;
  bool minus_degenerate = false;
};

inline constexpr double kDegenerateBranch = 1e-14;

// (P(+x), P(-x)) for the basis rotated by V.
std::pair<Matrix2c, Matrix2c> weak_operators(WeakStrength x, const UnitaryParams& u);

MeasurementDirection direction_from_unitary(const UnitaryParams& u);

// Closed-form ensemble. Depends on the basis only through z.
ConditionalEnsemble conditional_ensemble(const CorrelationParams& cp,
                                         const MeasurementDirection& z,
                                         WeakStrength x);

}  // namespace xsqd
