#include "xsqd/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace xsqd {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotXShaped: return "NotXShaped";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegenerateBranch: return "DegenerateBranch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

[[noreturn]] void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, std::string(to_string(code)) + ": " + msg);
}

}  // namespace

XState XState::from_entries(double a11, double a22, double a33, double a44,
                            Complex a14, Complex a23) {
  std::array<double, 4> diag{a11, a22, a33, a44};
  for (double d : diag) {
    if (!std::isfinite(d)) fail(ErrorCode::DomainError, "non-finite diagonal entry");
  }
  if (!finite(a14) || !finite(a23)) fail(ErrorCode::DomainError, "non-finite coherence");

  const double trace = a11 + a22 + a33 + a44;
  if (std::abs(trace - 1.0) > kStateTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "trace is " << trace;
    fail(ErrorCode::TraceNotOne, os.str());
  }
  for (double& d : diag) {
    if (d < -kStateTolerance) fail(ErrorCode::NotPositive, "negative diagonal entry");
    d = std::max(d, 0.0);
  }
  if (std::norm(a14) > diag[0] * diag[3] + kStateTolerance) {
    fail(ErrorCode::NotPositive, "|a14|^2 exceeds a11*a44");
  }
  if (std::norm(a23) > diag[1] * diag[2] + kStateTolerance) {
    fail(ErrorCode::NotPositive, "|a23|^2 exceeds a22*a33");
  }
  return XState(diag, a14, a23);
}

XState XState::maximally_mixed() { return from_entries(0.25, 0.25, 0.25, 0.25, 0.0, 0.0); }

XState XState::werner(double z) {
  return from_entries((1 + z) / 4, (1 - z) / 4, (1 - z) / 4, (1 + z) / 4, z / 2, 0.0);
}

XState XState::bell_diagonal(double c1, double c2, double c3) {
  return from_entries((1 + c3) / 4, (1 - c3) / 4, (1 - c3) / 4, (1 + c3) / 4,
                      (c1 - c2) / 4, (c1 + c2) / 4);
}

Matrix4c XState::to_matrix() const {
  Matrix4c m = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = diag_[i];
  m(0, 3) = a14_;
  m(3, 0) = std::conj(a14_);
  m(1, 2) = a23_;
  m(2, 1) = std::conj(a23_);
  return m;
}

XState validate_xstate(const Matrix4c& m) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!finite(m(i, j))) fail(ErrorCode::DomainError, "non-finite matrix entry");
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool on_x = (i == j) || (i + j == 3);
      if (!on_x && std::abs(m(i, j)) > kStateTolerance) {
        std::ostringstream os;
        os << "entry (" << i + 1 << "," << j + 1 << ") is off the X pattern";
        fail(ErrorCode::NotXShaped, os.str());
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (std::abs(m(i, i).imag()) > kStateTolerance) {
      fail(ErrorCode::NotHermitian, "diagonal entry has an imaginary part");
    }
  }
  if (std::abs(m(0, 3) - std::conj(m(3, 0))) > kStateTolerance ||
      std::abs(m(1, 2) - std::conj(m(2, 1))) > kStateTolerance) {
    fail(ErrorCode::NotHermitian, "anti-diagonal entries are not conjugate pairs");
  }
  // Average the conjugate pairs so the stored coherence is the Hermitian part.
  const Complex a14 = 0.5 * (m(0, 3) + std::conj(m(3, 0)));
  const Complex a23 = 0.5 * (m(1, 2) + std::conj(m(2, 1)));
  return XState::from_entries(m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
                              m(3, 3).real(), a14, a23);
}

CorrelationParams correlation_params(const XState& s) {
  CorrelationParams cp;
  cp.a3 = s.a11() - s.a44() + s.a22() - s.a33();
  cp.b3 = s.a11() - s.a44() - s.a22() + s.a33();
  cp.c3 = s.a11() + s.a44() - s.a22() - s.a33();
  cp.c1 = 2.0 * (s.a23() + s.a14());
  cp.c2 = 2.0 * (s.a23() - s.a14());
  cp.d1 = cp.c3 + cp.a3 + cp.b3;
  cp.d2 = -cp.c3 + cp.a3 - cp.b3;
  cp.d3 = -cp.c3 - cp.a3 + cp.b3;
  cp.d4 = cp.c3 - cp.a3 - cp.b3;
  return cp;
}

Matrix4c matrix_from_params(const CorrelationParams& cp) {
  const double d1 = cp.c3 + cp.a3 + cp.b3;
  const double d2 = -cp.c3 + cp.a3 - cp.b3;
  const double d3 = -cp.c3 - cp.a3 + cp.b3;
  const double d4 = cp.c3 - cp.a3 - cp.b3;
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = (1 + d1) / 4;
  m(1, 1) = (1 + d2) / 4;
  m(2, 2) = (1 + d3) / 4;
  m(3, 3) = (1 + d4) / 4;
  m(0, 3) = (cp.c1 - cp.c2) / 4.0;
  m(3, 0) = std::conj(m(0, 3));
  m(1, 2) = (cp.c1 + cp.c2) / 4.0;
  m(2, 1) = std::conj(m(1, 2));
  return m;
}

namespace {

// Eigenvalues of [[p, c], [c*, q]] as (larger, smaller).
std::array<double, 2> hermitian_block_eigenvalues(double p, double q, Complex c) {
  const double mean = 0.5 * (p + q);
  const double radius = std::hypot(0.5 * (p - q), std::abs(c));
  return {mean + radius, mean - radius};
}

double clamp_small_negative(double v) { return (v < 0.0 && v >= -kStateTolerance) ? 0.0 : v; }

}  // namespace

Spectrum4 xstate_spectrum(const XState& s) {
  const auto outer = hermitian_block_eigenvalues(s.a11(), s.a44(), s.a14());
  const auto inner = hermitian_block_eigenvalues(s.a22(), s.a33(), s.a23());
  Spectrum4 spec{outer[0], outer[1], inner[0], inner[1]};
  for (double& v : spec) v = clamp_small_negative(v);
  std::sort(spec.begin(), spec.end(), std::greater<>());
  return spec;
}

double von_neumann_entropy(std::span<const double> spectrum) {
  double h = 0.0;
  for (double l : spectrum) {
    if (!(l >= -kStateTolerance)) fail(ErrorCode::DomainError, "negative eigenvalue");
    if (l > 0.0) h -= l * std::log2(l);
  }
  return h;
}

double binary_entropy(double q) {
  const std::array<double, 2> pair{q, 1.0 - q};
  return von_neumann_entropy(pair);
}

std::array<double, 2> DensityMatrix2::eigenvalues() const {
  auto ev = hermitian_block_eigenvalues(m(0, 0).real(), m(1, 1).real(), m(0, 1));
  for (double& v : ev) v = clamp_small_negative(v);
  return ev;
}

DensityMatrix2 reduced_a(const XState& s) {
  DensityMatrix2 r{Matrix2c::Zero()};
  r.m(0, 0) = s.a11() + s.a22();
  r.m(1, 1) = s.a33() + s.a44();
  return r;
}

DensityMatrix2 reduced_b(const XState& s) {
  DensityMatrix2 r{Matrix2c::Zero()};
  r.m(0, 0) = s.a11() + s.a33();
  r.m(1, 1) = s.a22() + s.a44();
  return r;
}

double entropy(const XState& s) {
  const Spectrum4 spec = xstate_spectrum(s);
  return von_neumann_entropy(spec);
}

double entropy(const DensityMatrix2& rho) {
  const auto ev = rho.eigenvalues();
  return von_neumann_entropy(ev);
}

double mutual_information(const XState& s) {
  return entropy(reduced_a(s)) + entropy(reduced_b(s)) - entropy(s);
}

}  // namespace xsqd
