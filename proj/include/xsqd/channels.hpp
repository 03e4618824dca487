#pragma once

// Local channels acting on subsystem B.

#include "xsqd/qstate.hpp"

namespace xsqd {

// Probability that the bit-flip channel leaves the qubit untouched.
class NoiseProbability {
 public:
  static NoiseProbability of(double p);

  double value() const noexcept { return p_; }

 private:
  explicit NoiseProbability(double p) : p_(p) {}
  double p_;
};

struct KrausPair {
  Matrix2c e0;
  Matrix2c e1;

  // Max-norm deviation of e0^dag e0 + e1^dag e1 from the identity.
  double completeness_error() const;
};

// E0 = sqrt(p) I, E1 = sqrt(1 - p) sigma1.
KrausPair bit_flip_kraus(NoiseProbability p);

// Entry-level closed form of sum_i (I x E_i) rho (I x E_i)^dag for the
// bit-flip pair. The result is again an X-state.
XState apply_local_bitflip(const XState& s, NoiseProbability p);

// Dense application of an arbitrary Kraus pair on B.
Matrix4c apply_kraus_b(const XState& s, const KrausPair& k);

}  // namespace xsqd
