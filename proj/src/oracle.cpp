#include "xsqd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace xsqd {

void OracleConfig::validate() const {
  if (unitary_grid < 24) throw Error(ErrorCode::DomainError, "DomainError: unitary_grid must be >= 24");
  if (refine_starts < 1) throw Error(ErrorCode::DomainError, "DomainError: refine_starts must be >= 1");
}

std::array<double, 4> dense_spectrum(const Matrix4c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::Vector4d ev = solver.eigenvalues();  // ascending
  return {ev(3), ev(2), ev(1), ev(0)};
}

Matrix2c partial_trace_b(const Matrix4c& m) {
  Matrix2c r = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += m(2 * i + k, 2 * j + k);
  return r;
}

Matrix2c partial_trace_a(const Matrix4c& m) {
  Matrix2c r = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += m(2 * k + i, 2 * k + j);
  return r;
}

namespace {

double entropy_dense2(const Matrix2c& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix2c> solver(rho, Eigen::EigenvaluesOnly);
  const Eigen::Vector2d ev = solver.eigenvalues();
  std::array<double, 2> spec{std::clamp(ev(1), 0.0, 1.0), std::clamp(ev(0), 0.0, 1.0)};
  return von_neumann_entropy(spec);
}

struct DenseBranch {
  double probability = 0.0;
  Matrix2c rho_a;
  bool degenerate = true;
};

DenseBranch measure_branch(const Matrix4c& rho, const Matrix2c& op) {
  const Matrix4c k = Eigen::kroneckerProduct(Matrix2c::Identity(), op);
  const Matrix4c post = k * rho * k.adjoint();
  DenseBranch b;
  b.probability = post.trace().real();
  if (b.probability <= kDegenerateBranch) {
    b.probability = 0.0;
    return b;
  }
  b.rho_a = partial_trace_b(post) / b.probability;
  b.degenerate = false;
  return b;
}

std::pair<DenseBranch, DenseBranch> measure(const Matrix4c& rho, const UnitaryParams& u,
                                            WeakStrength x) {
  const auto [plus, minus] = weak_operators(x, u);
  return {measure_branch(rho, plus), measure_branch(rho, minus)};
}

double dense_objective(const Matrix4c& rho, const UnitaryParams& u, WeakStrength x) {
  const auto [plus, minus] = measure(rho, u, x);
  double s = 0.0;
  if (!plus.degenerate) s += plus.probability * entropy_dense2(plus.rho_a);
  if (!minus.degenerate) s += minus.probability * entropy_dense2(minus.rho_a);
  return s;
}

UnitaryParams from_hyperspherical(double chi, double theta, double phi) {
  const double sc = std::sin(chi);
  const double st = std::sin(theta);
  return {std::cos(chi), sc * std::cos(theta), sc * st * std::cos(phi), sc * st * std::sin(phi)};
}

std::array<double, 3> to_hyperspherical(const UnitaryParams& u) {
  const double chi = std::acos(std::clamp(u.t, -1.0, 1.0));
  const double r = std::hypot(u.y1, u.y2, u.y3);
  const double theta = r > 0.0 ? std::acos(std::clamp(u.y1 / r, -1.0, 1.0)) : 0.0;
  const double phi = std::atan2(u.y3, u.y2);
  return {chi, theta, phi};
}

struct Candidate {
  UnitaryParams u;
  double value;
};

Candidate refine(const Matrix4c& rho, WeakStrength x, const UnitaryParams& start, double step) {
  constexpr double kTolerance = 1e-10;
  constexpr int kMaxIters = 1000;
  std::array<double, 3> angles = to_hyperspherical(start);
  auto eval = [&] { return dense_objective(rho, from_hyperspherical(angles[0], angles[1], angles[2]), x); };
  double best = eval();
  for (int iter = 0; iter < kMaxIters && step >= kTolerance; ++iter) {
    bool moved = false;
    for (double& a : angles) {
      const double origin = a;
      double keep = origin;
      for (double delta : {step, -step}) {
        a = origin + delta;
        const double v = eval();
        if (v < best) {
          best = v;
          keep = a;
          moved = true;
        }
      }
      a = keep;
    }
    if (!moved) step *= 0.5;
  }
  return {from_hyperspherical(angles[0], angles[1], angles[2]), best};
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

ConditionalEnsemble conditional_ensemble_direct(const XState& s, const UnitaryParams& u,
                                                WeakStrength x) {
  const auto [plus, minus] = measure(s.to_matrix(), u, x);
  ConditionalEnsemble e;
  e.p_plus = plus.probability;
  e.p_minus = minus.probability;
  e.plus_degenerate = plus.degenerate;
  e.minus_degenerate = minus.degenerate;
  auto spectrum = [](const DenseBranch& b) -> std::pair<double, double> {
    if (b.degenerate) return {1.0, 0.0};
    Eigen::SelfAdjointEigenSolver<Matrix2c> solver(b.rho_a, Eigen::EigenvaluesOnly);
    return {solver.eigenvalues()(1), solver.eigenvalues()(0)};
  };
  std::tie(e.lambda_plus, e.lambda_minus) = spectrum(plus);
  std::tie(e.lambda_plus_prime, e.lambda_minus_prime) = spectrum(minus);
  return e;
}

double oracle_objective(const XState& s, const UnitaryParams& u, WeakStrength x) {
  return dense_objective(s.to_matrix(), u, x);
}

std::vector<UnitaryParams> unitary_covering(int n, std::uint64_t seed) {
  // Additive recurrence with the generalized golden ratio of dimension 3
  // (real root of g^4 = g + 1), mapped onto S^3 by the area-preserving
  // Hopf-coordinate construction.
  constexpr double g = 1.2207440846057594753616853491088319144324890862486;
  const std::array<double, 3> alpha{1.0 / g, 1.0 / (g * g), 1.0 / (g * g * g)};
  std::array<double, 3> offset{0.5, 0.5, 0.5};
  if (seed != 0) {
    std::uint64_t state = seed;
    for (double& o : offset) o = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
  }

  std::vector<UnitaryParams> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::array<double, 3> u{};
    for (int d = 0; d < 3; ++d) {
      const double v = offset[d] + alpha[d] * (i + 1);
      u[d] = v - std::floor(v);
    }
    const double r1 = std::sqrt(1.0 - u[0]);
    const double r2 = std::sqrt(u[0]);
    const double a = 2.0 * std::numbers::pi * u[1];
    const double b = 2.0 * std::numbers::pi * u[2];
    pts.push_back({r2 * std::cos(b), r1 * std::sin(a), r1 * std::cos(a), r2 * std::sin(b)});
  }
  return pts;
}

OracleResult sqd_bruteforce(const XState& s, WeakStrength x, const OracleConfig& cfg) {
  cfg.validate();
  const Matrix4c rho = s.to_matrix();
  const auto grid = unitary_covering(cfg.unitary_grid, cfg.seed);

  std::vector<Candidate> scored;
  scored.reserve(grid.size());
  for (const auto& u : grid) scored.push_back({u, dense_objective(rho, u, x)});

  const auto starts = std::min<std::size_t>(static_cast<std::size_t>(cfg.refine_starts), scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(starts), scored.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  Candidate best = scored.front();
  if (cfg.refine) {
    // Spacing of n points on a 3-sphere of volume 2 pi^2.
    const double spacing = std::cbrt(2.0 * std::numbers::pi * std::numbers::pi / cfg.unitary_grid);
    for (std::size_t k = 0; k < starts; ++k) {
      const Candidate c = refine(rho, x, scored[k].u, spacing);
      if (c.value < best.value) best = c;
    }
  }

  OracleResult r;
  r.argmin = best.u;
  r.s_w_min = best.value;
  r.s_b = entropy_dense2(partial_trace_a(rho));
  const auto spec = dense_spectrum(rho);
  std::array<double, 4> clamped{};
  std::transform(spec.begin(), spec.end(), clamped.begin(),
                 [](double v) { return std::clamp(v, 0.0, 1.0); });
  r.s_ab = von_neumann_entropy(clamped);
  r.value = r.s_w_min + r.s_b - r.s_ab;
  return r;
}

}  // namespace xsqd
