// xsqd command-line front end. Talks to the library only through the C API.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xsqd/xsqd.h"

namespace {

enum ExitCode : int {
  kOk = 0,
  kIo = 2,
  kParse = 3,
  kInvalidState = 4,
  kBadFlags = 5,
  kInternal = 6,
};

struct StateDeleter {
  void operator()(xsqd_state* s) const { xsqd_state_free(s); }
};
using StatePtr = std::unique_ptr<xsqd_state, StateDeleter>;

// Carries an exit code out of a subcommand.
struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(xsqd_status st) {
  switch (st) {
    case XSQD_OK: return kOk;
    case XSQD_ERR_IO: return kIo;
    case XSQD_ERR_PARSE: return kParse;
    case XSQD_ERR_NOT_X_SHAPED:
    case XSQD_ERR_NOT_HERMITIAN:
    case XSQD_ERR_TRACE_NOT_ONE:
    case XSQD_ERR_NOT_POSITIVE:
    case XSQD_ERR_DOMAIN: return kInvalidState;
    case XSQD_ERR_INVALID_ARGUMENT: return kBadFlags;
    case XSQD_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(xsqd_status st) {
  if (st != XSQD_OK) throw CliFailure{exit_code_for(st), xsqd_last_error()};
}

[[noreturn]] void bad_flag(const std::string& msg) { throw CliFailure{kBadFlags, msg}; }

StatePtr load(const std::string& path) {
  xsqd_state* raw = nullptr;
  check(xsqd_state_load(path.c_str(), &raw));
  return StatePtr(raw);
}

// Fixed notation, 12 digits after the point, no negative zero.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

double parse_strength(const std::string& text) {
  if (text == "inf" || text == "+inf") return HUGE_VAL;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v) ||
      v < 0.0) {
    bad_flag("invalid --x value '" + text + "': expected a number >= 0 or 'inf'");
  }
  return v;
}

std::string format_strength(double x) { return std::isinf(x) ? "inf" : num(x); }

struct Range {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  void check(const std::string& name, bool probability) const {
    if (!std::isfinite(min) || !std::isfinite(max) || min > max) {
      bad_flag(name + ": need finite min <= max");
    }
    if (steps < 2) bad_flag(name + ": steps must be >= 2");
    if (probability && (min < 0.0 || max > 1.0)) bad_flag(name + ": range must lie in [0, 1]");
    if (!probability && min < 0.0) bad_flag(name + ": x must be >= 0");
  }

  double at(int i) const {
    if (i == steps - 1) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw CliFailure{kIo, "cannot open output file " + path};
    path_ = path;
  }

  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  void close() {
    stream().flush();
    if (!stream()) throw CliFailure{kIo, "write failed for " + (path_.empty() ? "stdout" : path_)};
  }

 private:
  std::ofstream file_;
  std::string path_;
};

xsqd_result super_discord(const xsqd_state* s, double x) {
  xsqd_result r{};
  check(xsqd_super_discord(s, x, nullptr, &r));
  return r;
}

xsqd_result quantum_discord(const xsqd_state* s) {
  xsqd_result r{};
  check(xsqd_quantum_discord(s, nullptr, &r));
  return r;
}

StatePtr bitflip(const xsqd_state* s, double p) {
  xsqd_state* raw = nullptr;
  check(xsqd_apply_bitflip(s, p, &raw));
  return StatePtr(raw);
}

void print_matrix2(std::ostream& os, const char* name, const double re[4], const double im[4]) {
  os << name << ":\n";
  for (int i = 0; i < 2; ++i) {
    os << "  ";
    for (int j = 0; j < 2; ++j) {
      os << (j ? "  " : "") << num(re[2 * i + j]) << (im[2 * i + j] < 0 ? " - " : " + ")
         << num(std::abs(im[2 * i + j])) << "i";
    }
    os << "\n";
  }
}

void cmd_validate(const std::string& path) {
  const StatePtr s = load(path);
  xsqd_entries e{};
  xsqd_params cp{};
  double spectrum[4];
  double a_re[4], a_im[4], b_re[4], b_im[4];
  double s_ab = 0.0, mi = 0.0;
  check(xsqd_state_entries(s.get(), &e));
  check(xsqd_state_params(s.get(), &cp));
  check(xsqd_state_spectrum(s.get(), spectrum));
  check(xsqd_state_reduced(s.get(), a_re, a_im, b_re, b_im));
  check(xsqd_state_entropy(s.get(), &s_ab));
  check(xsqd_state_mutual_information(s.get(), &mi));

  std::ostream& os = std::cout;
  os << "valid X-state: " << path << "\n";
  os << "entries:\n";
  os << "  a11 = " << num(e.a11) << "\n  a22 = " << num(e.a22) << "\n  a33 = " << num(e.a33)
     << "\n  a44 = " << num(e.a44) << "\n";
  os << "  a14 = " << num(e.a14_re) << ", " << num(e.a14_im) << "\n";
  os << "  a23 = " << num(e.a23_re) << ", " << num(e.a23_im) << "\n";
  os << "correlation parameters:\n";
  os << "  a3 = " << num(cp.a3) << "\n  b3 = " << num(cp.b3) << "\n  c3 = " << num(cp.c3) << "\n";
  os << "  c1 = " << num(cp.c1_re) << ", " << num(cp.c1_im) << "\n";
  os << "  c2 = " << num(cp.c2_re) << ", " << num(cp.c2_im) << "\n";
  os << "  d1 = " << num(cp.d1) << "\n  d2 = " << num(cp.d2) << "\n  d3 = " << num(cp.d3)
     << "\n  d4 = " << num(cp.d4) << "\n";
  os << "spectrum: " << num(spectrum[0]) << ", " << num(spectrum[1]) << ", " << num(spectrum[2])
     << ", " << num(spectrum[3]) << "\n";
  print_matrix2(os, "rho_A", a_re, a_im);
  print_matrix2(os, "rho_B", b_re, b_im);
  os << "entropy S(rho_AB) = " << num(s_ab) << "\n";
  os << "mutual information = " << num(mi) << "\n";
}

void cmd_compute(const std::string& path, const std::string& x_text, const std::string& method) {
  const double x = parse_strength(x_text);
  const StatePtr s = load(path);

  xsqd_result sqd{};
  xsqd_result qd{};
  if (method == "oracle") {
    xsqd_oracle_config cfg;
    xsqd_oracle_config_default(&cfg);
    check(xsqd_oracle_discord(s.get(), x, &cfg, &sqd));
    check(xsqd_oracle_discord(s.get(), HUGE_VAL, &cfg, &qd));
  } else {
    sqd = super_discord(s.get(), x);
    qd = quantum_discord(s.get());
  }
  std::cout << "x,sqd,qd,s_w_min,s_b,s_ab,z1,z2,z3\n";
  std::cout << format_strength(x) << ',' << num(sqd.value) << ',' << num(qd.value) << ','
            << num(sqd.s_w_min) << ',' << num(sqd.s_b) << ',' << num(sqd.s_ab) << ',' << num(sqd.z1)
            << ',' << num(sqd.z2) << ',' << num(sqd.z3) << '\n';
}

void cmd_sweep_x(const std::string& path, const Range& range, const std::string& out_path) {
  range.check("sweep-x", false);
  const StatePtr s = load(path);
  const double qd = quantum_discord(s.get()).value;

  Output out(out_path);
  out.stream() << "x,sqd,qd\n";
  for (int i = 0; i < range.steps; ++i) {
    const double x = range.at(i);
    out.stream() << num(x) << ',' << num(super_discord(s.get(), x).value) << ',' << num(qd) << '\n';
  }
  out.close();
}

void cmd_sweep_p(const std::string& path, const std::string& x_text, const Range& range,
                 const std::string& out_path) {
  const double x = parse_strength(x_text);
  range.check("sweep-p", true);
  const StatePtr s = load(path);

  Output out(out_path);
  out.stream() << "p,sqd_noisy,qd_noisy\n";
  for (int i = 0; i < range.steps; ++i) {
    const double p = range.at(i);
    const StatePtr noisy = bitflip(s.get(), p);
    out.stream() << num(p) << ',' << num(super_discord(noisy.get(), x).value) << ','
                 << num(quantum_discord(noisy.get()).value) << '\n';
  }
  out.close();
}

void cmd_surface(const std::string& path, const Range& xr, const Range& pr,
                 const std::string& out_path) {
  xr.check("surface x", false);
  pr.check("surface p", true);
  const StatePtr s = load(path);
  const double qd_clean = quantum_discord(s.get()).value;

  std::vector<StatePtr> noisy;
  std::vector<double> qd_noisy;
  for (int j = 0; j < pr.steps; ++j) {
    noisy.push_back(bitflip(s.get(), pr.at(j)));
    qd_noisy.push_back(quantum_discord(noisy.back().get()).value);
  }

  Output out(out_path);
  out.stream() << "x,p,sqd_noisy,qd_noisy,qd_clean\n";
  for (int i = 0; i < xr.steps; ++i) {
    const double x = xr.at(i);
    for (int j = 0; j < pr.steps; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      out.stream() << num(x) << ',' << num(pr.at(j)) << ','
                   << num(super_discord(noisy[ju].get(), x).value) << ',' << num(qd_noisy[ju]) << ','
                   << num(qd_clean) << '\n';
    }
  }
  out.close();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super quantum discord and quantum discord of two-qubit X-states"};
  app.require_subcommand(1);

  std::string file;
  std::string x_text = "0";
  std::string method = "analytic";
  std::string out_path = "-";
  Range range;
  Range x_range{0.0, 5.0, 11};
  Range p_range{0.0, 1.0, 21};

  auto* validate = app.add_subcommand("validate", "Validate a state file and print its parameters");
  validate->add_option("file", file, "JSON state file")->required();

  auto* compute = app.add_subcommand("compute", "Super and projective discord at one strength");
  compute->add_option("file", file, "JSON state file")->required();
  compute->add_option("--x", x_text, "Measurement strength, or 'inf' for projective")->required();
  compute->add_option("--method", method, "analytic or oracle")
      ->check(CLI::IsMember({"analytic", "oracle"}));

  auto* sweep_x = app.add_subcommand("sweep-x", "Discord as a function of measurement strength");
  sweep_x->add_option("file", file, "JSON state file")->required();
  sweep_x->add_option("--min", range.min, "Smallest x")->required();
  sweep_x->add_option("--max", range.max, "Largest x")->required();
  sweep_x->add_option("--steps", range.steps, "Number of grid points (>= 2)")->required();
  sweep_x->add_option("--out", out_path, "Output CSV ('-' for stdout)");

  auto* sweep_p = app.add_subcommand("sweep-p", "Discord under the local bit-flip channel");
  sweep_p->add_option("file", file, "JSON state file")->required();
  sweep_p->add_option("--x", x_text, "Measurement strength, or 'inf' for projective")->required();
  sweep_p->add_option("--min", range.min, "Smallest p")->required();
  sweep_p->add_option("--max", range.max, "Largest p")->required();
  sweep_p->add_option("--steps", range.steps, "Number of grid points (>= 2)")->required();
  sweep_p->add_option("--out", out_path, "Output CSV ('-' for stdout)");

  auto* surface = app.add_subcommand("surface", "Discord over the (x, p) plane");
  surface->add_option("file", file, "JSON state file")->required();
  surface->add_option("--x-min", x_range.min, "Smallest x")->capture_default_str();
  surface->add_option("--x-max", x_range.max, "Largest x")->capture_default_str();
  surface->add_option("--x-steps", x_range.steps, "x grid points")->capture_default_str();
  surface->add_option("--p-min", p_range.min, "Smallest p")->capture_default_str();
  surface->add_option("--p-max", p_range.max, "Largest p")->capture_default_str();
  surface->add_option("--p-steps", p_range.steps, "p grid points")->capture_default_str();
  surface->add_option("--out", out_path, "Output CSV ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  try {
    if (*validate) cmd_validate(file);
    else if (*compute) cmd_compute(file, x_text, method);
    else if (*sweep_x) cmd_sweep_x(file, range, out_path);
    else if (*sweep_p) cmd_sweep_p(file, x_text, range, out_path);
    else if (*surface) cmd_surface(file, x_range, p_range, out_path);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kOk;
}
