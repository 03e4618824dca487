#pragma once

// JSON state files.
//
//   {"a11": .., "a22": .., "a33": .., "a44": ..,
//    "a14": {"re": .., "im": ..}, "a23": {"re": .., "im": ..}}
//
// or {"matrix": [[{"re": .., "im": ..}, x4], x4]}, which goes through
// validate_xstate.

#include <string>
#include <string_view>

#include "xsqd/qstate.hpp"

namespace xsqd {

// Throws Error with ParseError for malformed documents and the validation
// codes for well-formed but invalid states.
XState parse_state_json(std::string_view text);

// As above; IoError when the file cannot be read.
XState load_state_file(const std::string& path);

std::string state_to_json(const XState& s);

}  // namespace xsqd
