#include "xsqd/weakmeas.hpp"

#include <algorithm>
#include <cmath>

namespace xsqd {

WeakStrength WeakStrength::of(double x) {
  if (std::isinf(x) && x > 0) return projective();
  if (!std::isfinite(x) || x < 0.0) {
    throw Error(ErrorCode::DomainError, "DomainError: measurement strength must be >= 0");
  }
  return WeakStrength(x, false);
}

double WeakStrength::x() const noexcept {
  return projective_ ? HUGE_VAL : x_;
}

double WeakStrength::tanh() const noexcept {
  if (projective_) return 1.0;
  return x_ < 0.5 ? std::tanh(x_) : 1.0 - one_minus_tanh();
}

double WeakStrength::one_minus_tanh() const noexcept {
  if (projective_) return 0.0;
  if (x_ < 0.5) return 1.0 - std::tanh(x_);
  // 1 - tanh x = 2 / (1 + e^{2x})
  const double e = std::exp(-2.0 * x_);
  return 2.0 * e / (1.0 + e);
}

namespace {

constexpr double kUnitTolerance = 1e-12;

double norm3(double a, double b, double c) { return std::sqrt(a * a + b * b + c * c); }

}  // namespace

MeasurementDirection MeasurementDirection::checked(double z1, double z2, double z3) {
  if (std::abs(z1 * z1 + z2 * z2 + z3 * z3 - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::DomainError, "DomainError: measurement direction is not a unit vector");
  }
  return {z1, z2, z3};
}

MeasurementDirection MeasurementDirection::normalized(double z1, double z2, double z3) {
  const double n = norm3(z1, z2, z3);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::DomainError, "DomainError: cannot normalize a zero direction");
  }
  return {z1 / n, z2 / n, z3 / n};
}

UnitaryParams UnitaryParams::checked(double t, double y1, double y2, double y3) {
  if (std::abs(t * t + y1 * y1 + y2 * y2 + y3 * y3 - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::DomainError, "DomainError: unitary parameters are not normalized");
  }
  return {t, y1, y2, y3};
}

UnitaryParams UnitaryParams::normalized(double t, double y1, double y2, double y3) {
  const double n = std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::DomainError, "DomainError: cannot normalize zero unitary parameters");
  }
  return {t / n, y1 / n, y2 / n, y3 / n};
}

Matrix2c UnitaryParams::matrix() const {
  const Complex i(0.0, 1.0);
  Matrix2c v;
  // t I + i y.sigma
  v(0, 0) = t + i * y3;
  v(0, 1) = i * y1 + y2;
  v(1, 0) = i * y1 - y2;
  v(1, 1) = t - i * y3;
  return v;
}

std::pair<Matrix2c, Matrix2c> weak_operators(WeakStrength x, const UnitaryParams& u) {
  const Matrix2c v = u.matrix();
  const Matrix2c pi0 = v.col(0) * v.col(0).adjoint();
  const Matrix2c pi1 = v.col(1) * v.col(1).adjoint();

  const double lo = x.one_minus_tanh();  // 1 - tanh x
  const double hi = 2.0 - lo;            // 1 + tanh x
  const double small = std::sqrt(lo / 2.0);
  const double large = std::sqrt(hi / 2.0);
  return {small * pi0 + large * pi1, large * pi0 + small * pi1};
}

MeasurementDirection direction_from_unitary(const UnitaryParams& u) {
  const auto [t, y1, y2, y3] = u;
  return {2.0 * (-t * y2 + y1 * y3), 2.0 * (t * y1 + y2 * y3),
          t * t + y3 * y3 - y1 * y1 - y2 * y2};
}

namespace {

struct Branch {
  double probability;
  double lambda_plus;
  double lambda_minus;
  bool degenerate;
};

Branch make_branch(double denom, double z_component, double transverse_sq) {
  if (denom <= kDegenerateBranch) return {0.0, 1.0, 0.0, true};
  const double radius = std::min(1.0, std::sqrt(z_component * z_component + transverse_sq) / denom);
  return {0.5 * denom, 0.5 * (1.0 + radius), 0.5 * (1.0 - radius), false};
}

}  // namespace

ConditionalEnsemble conditional_ensemble(const CorrelationParams& cp,
                                         const MeasurementDirection& z,
                                         WeakStrength x) {
  const double t = x.tanh();
  const double a1 = z.z1 * cp.c1.real() + z.z2 * cp.c2.imag();
  const double a2 = z.z2 * cp.c2.real() - z.z1 * cp.c1.imag();
  const double transverse_sq = (a1 * a1 + a2 * a2) * t * t;
  const double bz = cp.b3 * z.z3 * t;
  const double cz = cp.c3 * z.z3 * t;

  const Branch plus = make_branch(1.0 - bz, cp.a3 - cz, transverse_sq);
  const Branch minus = make_branch(1.0 + bz, cp.a3 + cz, transverse_sq);

  ConditionalEnsemble e;
  e.p_plus = plus.probability;
  e.p_minus = minus.probability;
  if (plus.degenerate) e.p_minus = 1.0;
  if (minus.degenerate) e.p_plus = 1.0;
  e.lambda_plus = plus.lambda_plus;
  e.lambda_minus = plus.lambda_minus;
  e.lambda_plus_prime = minus.lambda_plus;
  e.lambda_minus_prime = minus.lambda_minus;
  e.plus_degenerate = plus.degenerate;
  e.minus_degenerate = minus.degenerate;
  return e;
}

}  // namespace xsqd
