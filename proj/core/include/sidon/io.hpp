#pragma once

#include <istream>
#include <string_view>
#include <vector>

#include "sidon/rational.hpp"

namespace sidon {

// One rational per line; blank lines and lines starting with '#' are
// skipped, as is anything after '#' on a value line.
std::vector<Rational> read_scalar_lines(std::istream& in);

// Comma-separated rationals, e.g. "1,1/2,1/4". Rejects empty fields.
std::vector<Rational> parse_rational_csv(std::string_view text);

}  // namespace sidon
