#pragma once

// System description files:
//
//   { "branches": [ {"kind": "affine",    "interval": [0.0, 0.3333333333333333]},
//                   {"kind": "quadratic", "interval": [0.75, 1.0], "epsilon": 0.3} ] }
//
// Unknown keys are rejected; "epsilon" is required for quadratic branches
// and not accepted for affine ones. Malformed input raises ParseError, a
// well-formed description that breaks a cookie-cutter invariant raises the
// corresponding validation error.

#include <filesystem>
#include <string_view>
#include <vector>

#include "cookie/system.hpp"

namespace cookie {

std::vector<BranchSpec> parse_branch_specs(std::string_view json_text);
CookieCutterSystem parse_system(std::string_view json_text);
CookieCutterSystem load_system(const std::filesystem::path& path);

}  // namespace cookie
