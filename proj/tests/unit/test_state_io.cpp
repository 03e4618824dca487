#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "xsqd/state_io.hpp"

using namespace xsqd;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_state_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse unexpectedly succeeded");
  return ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("entry form") {
  const XState s = parse_state_json(R"({"a11": 0.25, "a22": 0.25, "a33": 0.25, "a44": 0.25,
      "a14": {"re": 0.0625, "im": 0}, "a23": {"re": 0.125, "im": 0.0}})");
  CHECK(s.a14() == Complex(0.0625));
  CHECK(s.a23() == Complex(0.125));
}

TEST_CASE("matrix form") {
  const XState s = parse_state_json(R"({"matrix": [
      [{"re": 0.5, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0.1, "im": 0.2}],
      [{"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0}],
      [{"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0}],
      [{"re": 0.1, "im": -0.2}, {"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0.5, "im": 0}]]})");
  CHECK(s.a14() == Complex(0.1, 0.2));
  CHECK(s.a22() == 0.0);
}

TEST_CASE("parse and validation failures") {
  CHECK(code_of("{not json") == ErrorCode::ParseError);
  CHECK(code_of("[1, 2]") == ErrorCode::ParseError);
  CHECK(code_of(R"({"a11": 1})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"a11": "x", "a22": 0, "a33": 0, "a44": 0, "a14": {"re":0,"im":0}, "a23": {"re":0,"im":0}})") ==
        ErrorCode::ParseError);
  CHECK(code_of(R"({"a11": 0.25, "a22": 0.25, "a33": 0.25, "a44": 0.25, "a14": 0.3, "a23": {"re":0,"im":0}})") ==
        ErrorCode::ParseError);
  CHECK(code_of(R"({"matrix": [[1]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"a11": 0.25, "a22": 0.25, "a33": 0.25, "a44": 0.25,
      "a14": {"re": 0.3, "im": 0}, "a23": {"re": 0, "im": 0}})") == ErrorCode::NotPositive);
  CHECK(code_of(R"({"a11": 0.5, "a22": 0.25, "a33": 0.25, "a44": 0.25,
      "a14": {"re": 0, "im": 0}, "a23": {"re": 0, "im": 0}})") == ErrorCode::TraceNotOne);
}

TEST_CASE("file round trip") {
  const XState s = XState::from_entries(0.4, 0.3, 0.2, 0.1, Complex(0.1, -0.05), Complex(0.0, 0.2));
  const std::string path = "xsqd_state_io_roundtrip.json";
  {
    std::ofstream out(path);
    out << state_to_json(s);
  }
  const XState back = load_state_file(path);
  std::remove(path.c_str());
  CHECK((back.to_matrix() - s.to_matrix()).cwiseAbs().maxCoeff() == 0.0);

  try {
    load_state_file("/nonexistent/dir/state.json");
    FAIL("expected an IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}
