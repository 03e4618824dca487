#include "xsqd/channels.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace xsqd {

NoiseProbability NoiseProbability::of(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::DomainError, "DomainError: noise probability must lie in [0, 1]");
  }
  return NoiseProbability(p);
}

double KrausPair::completeness_error() const {
  const Matrix2c sum = e0.adjoint() * e0 + e1.adjoint() * e1;
  return (sum - Matrix2c::Identity()).cwiseAbs().maxCoeff();
}

KrausPair bit_flip_kraus(NoiseProbability p) {
  Matrix2c flip;
  flip << 0.0, 1.0, 1.0, 0.0;
  return {std::sqrt(p.value()) * Matrix2c::Identity(), std::sqrt(1.0 - p.value()) * flip};
}

XState apply_local_bitflip(const XState& s, NoiseProbability noise) {
  const double p = noise.value();
  return XState::from_entries(
      s.a22() + p * (s.a11() - s.a22()),
      s.a11() - p * (s.a11() - s.a22()),
      s.a44() + p * (s.a33() - s.a44()),
      s.a33() - p * (s.a33() - s.a44()),
      s.a23() + p * (s.a14() - s.a23()),
      s.a14() - p * (s.a14() - s.a23()));
}

Matrix4c apply_kraus_b(const XState& s, const KrausPair& k) {
  const Matrix4c rho = s.to_matrix();
  const Matrix2c id = Matrix2c::Identity();
  const Matrix4c k0 = Eigen::kroneckerProduct(id, k.e0);
  const Matrix4c k1 = Eigen::kroneckerProduct(id, k.e1);
  return k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint();
}

}  // namespace xsqd
