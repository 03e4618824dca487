// Runs the xsqd executable end to end.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef XSQD_CLI_PATH
#error "XSQD_CLI_PATH must be defined"
#endif
#ifndef XSQD_TEST_DATA
#error "XSQD_TEST_DATA must be defined"
#endif

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(XSQD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(XSQD_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) row.push_back(f == "inf" ? HUGE_VAL : std::stod(f));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("validate") {
  const Run ok = run("validate " + data("example.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("c1 = 0.375000000000, 0.000000000000") != std::string::npos);
  CHECK(ok.out.find("c2 = 0.125000000000, 0.000000000000") != std::string::npos);
  CHECK(ok.out.find("spectrum: 0.375000000000, 0.312500000000, 0.187500000000, 0.125000000000") !=
        std::string::npos);

  CHECK(run("validate " + data("malformed.json")).exit_code == 3);
  CHECK(run("validate " + data("not_positive.json")).exit_code == 4);
  CHECK(run("validate " + data("does_not_exist.json")).exit_code == 2);
  CHECK(run("validate").exit_code == 5);
}

TEST_CASE("compute golden row") {
  // Expected digits from 40-digit evaluation of the closed expressions.
  const Run r = run("compute " + data("example.json") + " --x 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "x,sqd,qd,s_w_min,s_b,s_ab,z1,z2,z3\n"
        "1.000000000000,0.057479270488,0.013182168843,0.940335334180,1.000000000000,"
        "1.882856063692,1.000000000000,0.000000000000,0.000000000000\n");

  const Run zero = run("compute " + data("example.json") + " --x 0");
  CHECK(zero.out.find("\n0.000000000000,0.117143936308,") != std::string::npos);
}

TEST_CASE("compute projective and oracle") {
  std::string header;
  const auto inf = read_csv(run("compute " + data("werner_0.5.json") + " --x inf").out, &header);
  REQUIRE(inf.size() == 1);
  CHECK(inf[0][1] == inf[0][2]);

  const auto oracle = read_csv(run("compute " + data("example.json") + " --x 1 --method oracle").out, &header);
  REQUIRE(oracle.size() == 1);
  CHECK(std::abs(oracle[0][1] - 0.057479270488) <= 1e-6);
}

TEST_CASE("bad flags") {
  CHECK(run("compute " + data("example.json") + " --x -1").exit_code == 5);
  CHECK(run("compute " + data("example.json") + " --x abc").exit_code == 5);
  CHECK(run("compute " + data("example.json") + " --x 1 --method magic").exit_code == 5);
  CHECK(run("sweep-x " + data("example.json") + " --min 1 --max 0 --steps 5").exit_code == 5);
  CHECK(run("sweep-p " + data("example.json") + " --x 1 --min 0 --max 2 --steps 5").exit_code == 5);
  CHECK(run("sweep-p " + data("example.json") + " --x 1 --min 0 --max 1 --steps 1").exit_code == 5);
  CHECK(run("frobnicate").exit_code == 5);
}

TEST_CASE("sweep-x") {
  const std::string out = "cli_sweep_x.csv";
  REQUIRE(run("sweep-x " + data("example.json") + " --min 0 --max 5 --steps 51 --out " + out).exit_code == 0);
  std::string header;
  const auto rows = read_csv(slurp(out), &header);
  std::remove(out.c_str());
  CHECK(header == "x,sqd,qd");
  REQUIRE(rows.size() == 51);
  CHECK(std::abs(rows[0][1] - 0.117143936308) <= 1e-12);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] <= rows[i - 1][1] + 1e-10);
  CHECK(rows.back()[0] == 5.0);

  const auto mixed = read_csv(run("sweep-x " + data("maximally_mixed.json") + " --min 0 --max 2 --steps 3").out,
                              &header);
  for (const auto& r : mixed) {
    CHECK(r[1] == 0.0);
    CHECK(r[2] == 0.0);
  }
}

TEST_CASE("sweep-x on a Werner state follows the closed form") {
  std::string header;
  const auto rows = read_csv(run("sweep-x " + data("werner_0.5.json") + " --min 0 --max 3 --steps 7").out, &header);
  REQUIRE(rows.size() == 7);
  auto closed = [](double x) {
    const double z = 0.5, t = std::tanh(x);
    auto xl = [](double v) { return v > 0 ? v * std::log2(v) : 0.0; };
    return -xl((1 - z * t) / 2) - xl((1 + z * t) / 2) + 1 + 3 * xl((1 - z) / 4) + xl((1 + 3 * z) / 4);
  };
  for (const auto& r : rows) CHECK(std::abs(r[1] - closed(r[0])) <= 1e-9);
}

TEST_CASE("sweep-p") {
  std::string header;
  const auto rows = read_csv(run("sweep-p " + data("example.json") + " --x 1 --min 0 --max 1 --steps 21").out, &header);
  CHECK(header == "p,sqd_noisy,qd_noisy");
  REQUIRE(rows.size() == 21);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(std::abs(rows[i][1] - rows[rows.size() - 1 - i][1]) <= 1e-10);
    CHECK(std::abs(rows[i][2] - rows[rows.size() - 1 - i][2]) <= 1e-10);
    CHECK(rows[i][1] >= rows[10][1]);
  }
  CHECK(std::abs(rows.front()[1] - 0.057479270488) <= 1e-12);

  const auto proj = read_csv(run("sweep-p " + data("example.json") + " --x inf --min 0 --max 1 --steps 5").out, &header);
  for (const auto& r : proj) CHECK(r[1] == r[2]);
}

TEST_CASE("surface") {
  const std::string out = "cli_surface.csv";
  REQUIRE(run("surface " + data("example.json") +
              " --x-min 0 --x-max 4 --x-steps 5 --p-min 0 --p-max 1 --p-steps 11 --out " + out)
              .exit_code == 0);
  const std::string text = slurp(out);
  std::remove(out.c_str());
  std::string header;
  const auto rows = read_csv(text, &header);
  CHECK(header == "x,p,sqd_noisy,qd_noisy,qd_clean");
  REQUIRE(rows.size() == 55);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][0] == 1.0 * static_cast<double>(i / 11));
    CHECK(rows[i][2] >= rows[i][3] - 1e-10);
  }
  for (std::size_t xi = 0; xi < 5; ++xi) CHECK(rows[xi * 11][2] == rows[xi * 11 + 10][2]);

  const auto single = read_csv(run("surface " + data("example.json") +
                                   " --x-min 20 --x-max 20 --x-steps 2 --p-min 1 --p-max 1 --p-steps 2").out,
                               &header);
  CHECK(std::abs(single[0][2] - single[0][4]) <= 1e-6);
}

TEST_CASE("output is deterministic") {
  const std::string args = "sweep-p " + data("example.json") + " --x 0.7 --min 0 --max 1 --steps 9";
  CHECK(run(args).out == run(args).out);
}
