#pragma once

#include <string>
#include <vector>

#include "fractheta/grid.hpp"

namespace fractheta::cli {

/// Parses a step-size specification: either a comma list of rationals
/// ("1/4,1/8,1/16") or a halving range "1/a..1/b" whose endpoints differ by
/// an exact power of 2. Throws Error(malformed_range) on anything else.
[[nodiscard]] std::vector<Rational> parse_h_list(const std::string& spec);

/// Command-line front end; args exclude the program name. Returns the
/// process exit code: 0 on success, 2 on rejected input, 3 on numerical
/// failure.
[[nodiscard]] int run(std::vector<std::string> args);

}  // namespace fractheta::cli
