#include "xsqd/sqd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

namespace xsqd {

void MinimizerConfig::validate() const {
  if (grid_points < 6) throw Error(ErrorCode::DomainError, "DomainError: grid_points must be >= 6");
  if (!(refine_tolerance > 0.0)) {
    throw Error(ErrorCode::DomainError, "DomainError: refine_tolerance must be > 0");
  }
  if (max_refine_iters < 1) {
    throw Error(ErrorCode::DomainError, "DomainError: max_refine_iters must be positive");
  }
  if (refine_starts < 0) throw Error(ErrorCode::DomainError, "DomainError: refine_starts must be >= 0");
}

std::vector<MeasurementDirection> candidate_directions() {
  return {
      {0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}, {0.0, 1.0, 0.0},
      {0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0},
  };
}

std::vector<MeasurementDirection> fibonacci_sphere(int n) {
  std::vector<MeasurementDirection> pts;
  pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

double avg_conditional_entropy(const CorrelationParams& cp, const MeasurementDirection& z,
                               WeakStrength x) {
  const ConditionalEnsemble e = conditional_ensemble(cp, z, x);
  double s = 0.0;
  if (!e.plus_degenerate) s += e.p_plus * binary_entropy(e.lambda_plus);
  if (!e.minus_degenerate) s += e.p_minus * binary_entropy(e.lambda_plus_prime);
  return s;
}

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kMinAngleStep = 1e-9;

MeasurementDirection from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

// Larger (z3, z2, z1) wins ties. Coordinates are compared on a 1e-6 lattice
// so that a refined point sitting on an axis does not beat the exact axis
// candidate through rounding noise; on equal keys the earlier entry stays.
bool lex_greater(const MeasurementDirection& a, const MeasurementDirection& b) {
  auto key = [](const MeasurementDirection& d) {
    return std::tuple{std::llround(d.z3 * 1e6), std::llround(d.z2 * 1e6), std::llround(d.z1 * 1e6)};
  };
  return key(a) > key(b);
}

DirectionMinimum select_minimum(const std::vector<DirectionMinimum>& found) {
  double best = found.front().value;
  for (const auto& f : found) best = std::min(best, f.value);
  const DirectionMinimum* pick = nullptr;
  for (const auto& f : found) {
    if (f.value > best + kTieTolerance) continue;
    if (pick == nullptr || lex_greater(f.direction, pick->direction)) pick = &f;
  }
  return *pick;
}

// Derivative-free coordinate descent on the polar and azimuthal angles.
DirectionMinimum refine(const CorrelationParams& cp, WeakStrength x,
                        const MeasurementDirection& start, double step,
                        const MinimizerConfig& cfg) {
  double theta = std::acos(std::clamp(start.z3, -1.0, 1.0));
  double phi = std::atan2(start.z2, start.z1);
  double best = avg_conditional_entropy(cp, from_angles(theta, phi), x);

  for (int iter = 0; iter < cfg.max_refine_iters && step >= kMinAngleStep; ++iter) {
    const double before = best;
    for (double* coord : {&theta, &phi}) {
      const double origin = *coord;
      double best_coord = origin;
      for (double delta : {step, -step}) {
        *coord = origin + delta;
        const double v = avg_conditional_entropy(cp, from_angles(theta, phi), x);
        if (v < best) {
          best = v;
          best_coord = *coord;
        }
      }
      *coord = best_coord;
    }
    if (before - best < cfg.refine_tolerance) step *= 0.5;
  }
  return {from_angles(theta, phi), best};
}

}  // namespace

DirectionMinimum minimize_over_candidates(const CorrelationParams& cp, WeakStrength x) {
  std::vector<DirectionMinimum> found;
  for (const auto& d : candidate_directions()) {
    found.push_back({d, avg_conditional_entropy(cp, d, x)});
  }
  return select_minimum(found);
}

DirectionMinimum minimize_conditional_entropy(const CorrelationParams& cp, WeakStrength x,
                                              const MinimizerConfig& cfg) {
  cfg.validate();
  std::vector<DirectionMinimum> found;
  for (const auto& d : candidate_directions()) {
    found.push_back({d, avg_conditional_entropy(cp, d, x)});
  }

  const auto grid = fibonacci_sphere(cfg.grid_points);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = avg_conditional_entropy(cp, grid[i], x);
  }
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  const auto starts = std::min<std::size_t>(static_cast<std::size_t>(cfg.refine_starts), grid.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return values[a] < values[b] || (values[a] == values[b] && a < b);
                    });

  const double spacing = std::sqrt(4.0 * std::numbers::pi / cfg.grid_points);
  for (std::size_t k = 0; k < starts; ++k) {
    found.push_back(refine(cp, x, grid[order[k]], spacing, cfg));
  }
  return select_minimum(found);
}

SQDResult super_discord(const XState& s, WeakStrength x, const MinimizerConfig& cfg) {
  const CorrelationParams cp = correlation_params(s);
  const DirectionMinimum best = minimize_conditional_entropy(cp, x, cfg);
  const ConditionalEnsemble e = conditional_ensemble(cp, best.direction, x);

  SQDResult r;
  r.direction = best.direction;
  r.s_w_min = best.value;
  r.p_plus = e.p_plus;
  r.p_minus = e.p_minus;
  r.s_b = entropy(reduced_b(s));
  r.s_ab = entropy(s);
  r.value = r.s_w_min + r.s_b - r.s_ab;
  r.projective = x.is_projective();
  return r;
}

SQDResult quantum_discord(const XState& s, const MinimizerConfig& cfg) {
  return super_discord(s, WeakStrength::projective(), cfg);
}

namespace {

double xlog2x(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

}  // namespace

double werner_sqd_closed_form(double z, WeakStrength x) {
  if (!(z >= 0.0 && z <= 1.0)) throw Error(ErrorCode::DomainError, "DomainError: Werner z must lie in [0, 1]");
  const double t = x.tanh();
  return -xlog2x((1 - z * t) / 2) - xlog2x((1 + z * t) / 2) + 1.0 +
         3.0 * xlog2x((1 - z) / 4) + xlog2x((1 + 3 * z) / 4);
}

double bell_diagonal_sqd_closed_form(double c1, double c2, double c3, WeakStrength x) {
  const std::array<double, 4> spectrum{
      (1 - c1 - c2 - c3) / 4,
      (1 - c1 + c2 + c3) / 4,
      (1 + c1 - c2 + c3) / 4,
      (1 + c1 + c2 - c3) / 4,
  };
  for (double l : spectrum) {
    if (l < -kStateTolerance) throw Error(ErrorCode::NotPositive, "NotPositive: invalid Bell-diagonal coefficients");
  }
  const double c = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
  const double t = x.tanh();
  double d = -xlog2x((1 - c * t) / 2) - xlog2x((1 + c * t) / 2) + 1.0;
  for (double l : spectrum) d += xlog2x(std::max(l, 0.0));
  return d;
}

}  // namespace xsqd
