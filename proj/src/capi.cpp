#include "xsqd/xsqd.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "xsqd/channels.hpp"
#include "xsqd/oracle.hpp"
#include "xsqd/sqd.hpp"
#include "xsqd/state_io.hpp"

struct xsqd_state {
  xsqd::XState state;
};

namespace {

thread_local std::string last_error;

xsqd_status status_of(xsqd::ErrorCode code) {
  switch (code) {
    case xsqd::ErrorCode::NotXShaped: return XSQD_ERR_NOT_X_SHAPED;
    case xsqd::ErrorCode::NotHermitian: return XSQD_ERR_NOT_HERMITIAN;
    case xsqd::ErrorCode::TraceNotOne: return XSQD_ERR_TRACE_NOT_ONE;
    case xsqd::ErrorCode::NotPositive: return XSQD_ERR_NOT_POSITIVE;
    case xsqd::ErrorCode::DomainError: return XSQD_ERR_DOMAIN;
    case xsqd::ErrorCode::DegenerateBranch: return XSQD_ERR_DOMAIN;
    case xsqd::ErrorCode::ParseError: return XSQD_ERR_PARSE;
    case xsqd::ErrorCode::IoError: return XSQD_ERR_IO;
  }
  return XSQD_ERR_INTERNAL;
}

xsqd_status fail(xsqd_status status, std::string msg) {
  last_error = std::move(msg);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
xsqd_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return XSQD_OK;
  } catch (const xsqd::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(XSQD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(XSQD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(XSQD_ERR_INTERNAL, "unknown error");
  }
}

xsqd_status null_argument() { return fail(XSQD_ERR_INVALID_ARGUMENT, "null argument"); }

xsqd::MinimizerConfig to_cpp(const xsqd_minimizer_config* cfg) {
  xsqd::MinimizerConfig c;
  if (cfg != nullptr) {
    c.grid_points = cfg->grid_points;
    c.refine_tolerance = cfg->refine_tolerance;
    c.max_refine_iters = cfg->max_refine_iters;
  }
  return c;
}

xsqd::OracleConfig to_cpp(const xsqd_oracle_config* cfg) {
  xsqd::OracleConfig c;
  if (cfg != nullptr) {
    c.unitary_grid = cfg->unitary_grid;
    c.refine = cfg->refine != 0;
    c.seed = cfg->seed;
  }
  return c;
}

void fill(const xsqd::SQDResult& r, xsqd_result* out) {
  out->value = r.value;
  out->z1 = r.direction.z1;
  out->z2 = r.direction.z2;
  out->z3 = r.direction.z3;
  out->s_w_min = r.s_w_min;
  out->p_plus = r.p_plus;
  out->p_minus = r.p_minus;
  out->s_b = r.s_b;
  out->s_ab = r.s_ab;
  out->projective = r.projective ? 1 : 0;
}

void write2(const xsqd::Matrix2c& m, double re[4], double im[4]) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      re[2 * i + j] = m(i, j).real();
      im[2 * i + j] = m(i, j).imag();
    }
  }
}

void emit_state(const xsqd::XState& s, xsqd_state** out) { *out = new xsqd_state{s}; }

}  // namespace

extern "C" {

const char* xsqd_status_string(xsqd_status status) {
  switch (status) {
    case XSQD_OK: return "ok";
    case XSQD_ERR_NOT_X_SHAPED: return "NotXShaped";
    case XSQD_ERR_NOT_HERMITIAN: return "NotHermitian";
    case XSQD_ERR_TRACE_NOT_ONE: return "TraceNotOne";
    case XSQD_ERR_NOT_POSITIVE: return "NotPositive";
    case XSQD_ERR_DOMAIN: return "DomainError";
    case XSQD_ERR_PARSE: return "ParseError";
    case XSQD_ERR_IO: return "IoError";
    case XSQD_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case XSQD_ERR_INTERNAL: return "InternalError";
  }
  return "unknown";
}

const char* xsqd_last_error(void) { return last_error.c_str(); }

void xsqd_minimizer_config_default(xsqd_minimizer_config* cfg) {
  if (cfg == nullptr) return;
  const xsqd::MinimizerConfig d;
  cfg->grid_points = d.grid_points;
  cfg->refine_tolerance = d.refine_tolerance;
  cfg->max_refine_iters = d.max_refine_iters;
}

void xsqd_oracle_config_default(xsqd_oracle_config* cfg) {
  if (cfg == nullptr) return;
  const xsqd::OracleConfig d;
  cfg->unitary_grid = d.unitary_grid;
  cfg->refine = d.refine ? 1 : 0;
  cfg->seed = d.seed;
}

xsqd_status xsqd_state_from_entries(const xsqd_entries* e, xsqd_state** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    emit_state(xsqd::XState::from_entries(e->a11, e->a22, e->a33, e->a44, {e->a14_re, e->a14_im},
                                          {e->a23_re, e->a23_im}),
               out);
  });
}

xsqd_status xsqd_state_from_matrix(const double re[16], const double im[16], xsqd_state** out) {
  if (re == nullptr || im == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    xsqd::Matrix4c m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = {re[4 * i + j], im[4 * i + j]};
    emit_state(xsqd::validate_xstate(m), out);
  });
}

xsqd_status xsqd_state_from_json(const char* text, xsqd_state** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] { emit_state(xsqd::parse_state_json(text), out); });
}

xsqd_status xsqd_state_load(const char* path, xsqd_state** out) {
  if (path == nullptr || out == nullptr) return null_argument();
  return guarded([&] { emit_state(xsqd::load_state_file(path), out); });
}

void xsqd_state_free(xsqd_state* state) { delete state; }

xsqd_status xsqd_state_entries(const xsqd_state* state, xsqd_entries* out) {
  if (state == nullptr || out == nullptr) return null_argument();
  const auto& s = state->state;
  *out = {s.a11(), s.a22(), s.a33(), s.a44(),
          s.a14().real(), s.a14().imag(), s.a23().real(), s.a23().imag()};
  return XSQD_OK;
}

xsqd_status xsqd_state_params(const xsqd_state* state, xsqd_params* out) {
  if (state == nullptr || out == nullptr) return null_argument();
  const auto cp = xsqd::correlation_params(state->state);
  *out = {cp.a3, cp.b3, cp.c3, cp.c1.real(), cp.c1.imag(), cp.c2.real(), cp.c2.imag(),
          cp.d1, cp.d2, cp.d3, cp.d4};
  return XSQD_OK;
}

xsqd_status xsqd_state_spectrum(const xsqd_state* state, double out[4]) {
  if (state == nullptr || out == nullptr) return null_argument();
  const auto spec = xsqd::xstate_spectrum(state->state);
  for (int i = 0; i < 4; ++i) out[i] = spec[static_cast<std::size_t>(i)];
  return XSQD_OK;
}

xsqd_status xsqd_state_reduced(const xsqd_state* state, double rho_a_re[4], double rho_a_im[4],
                               double rho_b_re[4], double rho_b_im[4]) {
  if (state == nullptr || rho_a_re == nullptr || rho_a_im == nullptr || rho_b_re == nullptr ||
      rho_b_im == nullptr) {
    return null_argument();
  }
  write2(xsqd::reduced_a(state->state).m, rho_a_re, rho_a_im);
  write2(xsqd::reduced_b(state->state).m, rho_b_re, rho_b_im);
  return XSQD_OK;
}

xsqd_status xsqd_state_entropy(const xsqd_state* state, double* out) {
  if (state == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = xsqd::entropy(state->state); });
}

xsqd_status xsqd_state_mutual_information(const xsqd_state* state, double* out) {
  if (state == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = xsqd::mutual_information(state->state); });
}

xsqd_status xsqd_apply_bitflip(const xsqd_state* state, double p, xsqd_state** out) {
  if (state == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    emit_state(xsqd::apply_local_bitflip(state->state, xsqd::NoiseProbability::of(p)), out);
  });
}

xsqd_status xsqd_super_discord(const xsqd_state* state, double x, const xsqd_minimizer_config* cfg,
                               xsqd_result* out) {
  if (state == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    fill(xsqd::super_discord(state->state, xsqd::WeakStrength::of(x), to_cpp(cfg)), out);
  });
}

xsqd_status xsqd_quantum_discord(const xsqd_state* state, const xsqd_minimizer_config* cfg,
                                 xsqd_result* out) {
  if (state == nullptr || out == nullptr) return null_argument();
  return guarded([&] { fill(xsqd::quantum_discord(state->state, to_cpp(cfg)), out); });
}

xsqd_status xsqd_oracle_discord(const xsqd_state* state, double x, const xsqd_oracle_config* cfg,
                                xsqd_result* out) {
  if (state == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto strength = xsqd::WeakStrength::of(x);
    const auto r = xsqd::sqd_bruteforce(state->state, strength, to_cpp(cfg));
    const auto dir = xsqd::direction_from_unitary(r.argmin);
    const auto e = xsqd::conditional_ensemble_direct(state->state, r.argmin, strength);
    *out = {r.value, dir.z1, dir.z2, dir.z3, r.s_w_min, e.p_plus, e.p_minus,
            r.s_b, r.s_ab, strength.is_projective() ? 1 : 0};
  });
}

xsqd_status xsqd_werner_closed_form(double z, double x, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = xsqd::werner_sqd_closed_form(z, xsqd::WeakStrength::of(x)); });
}

xsqd_status xsqd_bell_diagonal_closed_form(double c1, double c2, double c3, double x, double* out) {
  if (out == nullptr) return null_argument();
  return guarded(
      [&] { *out = xsqd::bell_diagonal_sqd_closed_form(c1, c2, c3, xsqd::WeakStrength::of(x)); });
}

}  // extern "C"
