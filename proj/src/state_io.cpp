#include "xsqd/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace xsqd {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorCode::ParseError, "ParseError: " + msg);
}

double number_at(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string("missing key \"") + key + "\"");
  if (!it->is_number()) parse_fail(std::string("key \"") + key + "\" is not a number");
  return it->get<double>();
}

Complex complex_from(const json& v, const std::string& where) {
  if (!v.is_object()) parse_fail(where + " must be an object {\"re\", \"im\"}");
  return {number_at(v, "re"), number_at(v, "im")};
}

Complex complex_at(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string("missing key \"") + key + "\"");
  return complex_from(*it, std::string("\"") + key + "\"");
}

}  // namespace

XState parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");

  if (const auto it = doc.find("matrix"); it != doc.end()) {
    const json& rows = *it;
    if (!rows.is_array() || rows.size() != 4) parse_fail("\"matrix\" must be a 4x4 array");
    Matrix4c m;
    for (int i = 0; i < 4; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != 4) parse_fail("\"matrix\" must be a 4x4 array");
      for (int j = 0; j < 4; ++j) {
        m(i, j) = complex_from(row[static_cast<std::size_t>(j)],
                               "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      }
    }
    return validate_xstate(m);
  }

  return XState::from_entries(number_at(doc, "a11"), number_at(doc, "a22"), number_at(doc, "a33"),
                              number_at(doc, "a44"), complex_at(doc, "a14"), complex_at(doc, "a23"));
}

XState load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "IoError: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "IoError: cannot read " + path);
  return parse_state_json(buf.str());
}

std::string state_to_json(const XState& s) {
  const json doc = {
      {"a11", s.a11()},
      {"a22", s.a22()},
      {"a33", s.a33()},
      {"a44", s.a44()},
      {"a14", {{"re", s.a14().real()}, {"im", s.a14().imag()}}},
      {"a23", {{"re", s.a23().real()}, {"im", s.a23().imag()}}},
  };
  return doc.dump(2);
}

}  // namespace xsqd
