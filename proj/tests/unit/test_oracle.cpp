#include <doctest.h>

#include <cmath>

#include "random_states.hpp"
#include "xsqd/oracle.hpp"
#include "xsqd/sqd.hpp"

using namespace xsqd;
using xsqd::testing::example_state;
using xsqd::testing::random_unitary;
using xsqd::testing::random_xstate;

TEST_CASE("dense helpers") {
  const XState s = XState::from_entries(0.4, 0.3, 0.2, 0.1, Complex(0.1, 0.05), Complex(0.0, 0.2));
  const Matrix4c m = s.to_matrix();
  CHECK((partial_trace_b(m) - reduced_a(s).m).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((partial_trace_a(m) - reduced_b(s).m).cwiseAbs().maxCoeff() <= 1e-15);
  const auto dense = dense_spectrum(m);
  const auto closed = xstate_spectrum(s);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(dense[i] - closed[i]) <= 1e-12);
}

TEST_CASE("unitary_covering") {
  const auto pts = unitary_covering(1000, 0);
  CHECK(pts.size() == 1000);
  double mean_t = 0.0;
  for (const auto& u : pts) {
    CHECK(std::abs(u.t * u.t + u.y1 * u.y1 + u.y2 * u.y2 + u.y3 * u.y3 - 1.0) <= 1e-12);
    mean_t += u.t;
  }
  CHECK(std::abs(mean_t / 1000.0) < 0.05);

  const auto again = unitary_covering(1000, 0);
  CHECK(again[517].y2 == pts[517].y2);
  const auto seeded = unitary_covering(1000, 42);
  CHECK(seeded[3].t != pts[3].t);
}

TEST_CASE("conditional_ensemble_direct examples") {
  std::mt19937_64 rng(91);
  const double t = std::tanh(1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const ConditionalEnsemble e =
        conditional_ensemble_direct(XState::werner(0.5), random_unitary(rng), WeakStrength::of(1.0));
    CHECK(std::abs(e.p_plus - 0.5) <= 1e-12);
    CHECK(std::abs(e.p_minus - 0.5) <= 1e-12);
    CHECK(std::abs(e.lambda_plus - (1 + 0.5 * t) / 2) <= 1e-12);
    CHECK(std::abs(e.lambda_plus_prime - (1 + 0.5 * t) / 2) <= 1e-12);
  }

  for (int trial = 0; trial < 20; ++trial) {
    const XState s = random_xstate(rng);
    const ConditionalEnsemble e = conditional_ensemble_direct(s, {1, 0, 0, 0}, WeakStrength::of(0.0));
    const auto rho_a = reduced_a(s).eigenvalues();
    CHECK(std::abs(e.lambda_plus - rho_a[0]) <= 1e-12);
    CHECK(std::abs(e.lambda_plus_prime - rho_a[0]) <= 1e-12);
  }

  // A unitary whose direction is e1: V = (I + i sigma2) / sqrt 2.
  const double h = 1.0 / std::sqrt(2.0);
  const UnitaryParams u{h, 0.0, h, 0.0};
  const MeasurementDirection d = direction_from_unitary(u);
  CHECK(std::abs(std::abs(d.z1) - 1.0) <= 1e-15);
  const ConditionalEnsemble dense = conditional_ensemble_direct(example_state(), u, WeakStrength::of(2.0));
  const ConditionalEnsemble closed =
      conditional_ensemble(correlation_params(example_state()), d, WeakStrength::of(2.0));
  CHECK(std::abs(dense.lambda_plus - closed.lambda_plus) <= 1e-10);
  CHECK(std::abs(dense.p_plus - closed.p_plus) <= 1e-10);
}

TEST_CASE("objective depends on the unitary only through its direction") {
  std::mt19937_64 rng(92);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int trial = 0; trial < 100; ++trial) {
    const XState s = random_xstate(rng);
    const UnitaryParams u = random_unitary(rng);
    // Right-multiplying by exp(i a sigma3) fixes V Pi0 V^dag.
    const double a = angle(rng);
    const double c = std::cos(a), sn = std::sin(a);
    const UnitaryParams w = UnitaryParams::normalized(
        u.t * c - u.y3 * sn, u.y1 * c - u.y2 * sn, u.y2 * c + u.y1 * sn, u.y3 * c + u.t * sn);
    const MeasurementDirection du = direction_from_unitary(u);
    const MeasurementDirection dw = direction_from_unitary(w);
    REQUIRE(std::abs(du.z1 - dw.z1) + std::abs(du.z2 - dw.z2) + std::abs(du.z3 - dw.z3) <= 1e-12);
    const WeakStrength x = WeakStrength::of(0.9);
    CHECK(std::abs(oracle_objective(s, u, x) - oracle_objective(s, w, x)) <= 1e-10);
  }
}

TEST_CASE("sqd_bruteforce examples") {
  OracleConfig cfg;
  cfg.unitary_grid = 4000;
  CHECK(std::abs(sqd_bruteforce(XState::maximally_mixed(), WeakStrength::of(1.0), cfg).value) <= 1e-12);

  const double werner = werner_sqd_closed_form(0.5, WeakStrength::of(1.0));
  CHECK(std::abs(sqd_bruteforce(XState::werner(0.5), WeakStrength::of(1.0), cfg).value - werner) <= 1e-9);

  OracleConfig coarse = cfg;
  coarse.unitary_grid = 20000;
  coarse.refine = false;
  const double analytic = super_discord(example_state(), WeakStrength::of(1.0)).value;
  const double grid_only = sqd_bruteforce(example_state(), WeakStrength::of(1.0), coarse).value;
  CHECK(grid_only >= analytic - 1e-9);
  CHECK(grid_only - analytic <= 1e-3);
  CHECK(std::abs(sqd_bruteforce(example_state(), WeakStrength::of(1.0), cfg).value - analytic) <= 1e-8);

  cfg.unitary_grid = 10;
  CHECK_THROWS_AS(sqd_bruteforce(example_state(), WeakStrength::of(1.0), cfg), Error);
}

TEST_CASE("oracle soundness and agreement on random states") {
  std::mt19937_64 rng(93);
  OracleConfig cfg;
  cfg.unitary_grid = 3000;
  for (int trial = 0; trial < 10; ++trial) {
    const XState s = random_xstate(rng);
    for (WeakStrength x : {WeakStrength::of(0.3), WeakStrength::projective()}) {
      const double analytic = super_discord(s, x).value;
      const double brute = sqd_bruteforce(s, x, cfg).value;
      CHECK(brute >= analytic - 1e-9);
      CHECK(brute - analytic <= 1e-6);
    }
  }
}
