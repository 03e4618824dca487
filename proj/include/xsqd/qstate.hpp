#pragma once

// Two-qubit X-states: validation, parameterization, spectra and entropies.
//
// Basis ordering is |00>, |01>, |10>, |11> with subsystem A the first
// (most significant) qubit and subsystem B the second. An X-state only has
// support on the diagonal and on the anti-diagonal entries a14 and a23.

#include <array>
#include <complex>
#include <span>

#include <Eigen/Core>

#include "xsqd/errors.hpp"

namespace xsqd {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr double kStateTolerance = 1e-12;

class XState {
 public:
  // Validating constructor. Diagonal entries in [-tol, 0) are clamped to 0.
  static XState from_entries(double a11, double a22, double a33, double a44,
                             Complex a14, Complex a23);

  static XState maximally_mixed();
  static XState werner(double z);
  static XState bell_diagonal(double c1, double c2, double c3);

  double a11() const noexcept { return diag_[0]; }
  double a22() const noexcept { return diag_[1]; }
  double a33() const noexcept { return diag_[2]; }
  double a44() const noexcept { return diag_[3]; }
  Complex a14() const noexcept { return a14_; }
  Complex a23() const noexcept { return a23_; }

  Matrix4c to_matrix() const;

 private:
  XState(std::array<double, 4> diag, Complex a14, Complex a23)
      : diag_(diag), a14_(a14), a23_(a23) {}

  std::array<double, 4> diag_;
  Complex a14_;
  Complex a23_;
};

struct CorrelationParams {
  double a3 = 0.0;
  double b3 = 0.0;
  double c3 = 0.0;
  Complex c1;
  Complex c2;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
};

// Hermitian 2x2, trace one. For X-states the reduced states are diagonal
// but the general form is kept.
struct DensityMatrix2 {
  Matrix2c m;

  std::array<double, 2> eigenvalues() const;
};

// Eigenvalues in descending order.
using Spectrum4 = std::array<double, 4>;

// Accepts a dense 4x4 matrix and checks X-shape, Hermiticity, unit trace
// and block positivity, in that order.
XState validate_xstate(const Matrix4c& m);

CorrelationParams correlation_params(const XState& s);

// Inverse of correlation_params: rebuilds the matrix from a3, b3, c3, c1, c2.
Matrix4c matrix_from_params(const CorrelationParams& cp);

Spectrum4 xstate_spectrum(const XState& s);

// -sum l log2 l with 0 log 0 = 0. Throws DomainError on entries below
// -1e-12; tiny negatives are treated as zero.
double von_neumann_entropy(std::span<const double> spectrum);

// Binary Shannon entropy of (q, 1 - q) in bits.
double binary_entropy(double q);

DensityMatrix2 reduced_a(const XState& s);
DensityMatrix2 reduced_b(const XState& s);

double entropy(const XState& s);
double entropy(const DensityMatrix2& rho);

double mutual_information(const XState& s);

}  // namespace xsqd
