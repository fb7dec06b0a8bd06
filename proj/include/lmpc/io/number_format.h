#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lmpc/common.h"

namespace lmpc::io {

/// Shortest decimal text that parses back to the identical double.
/// Infinities are written as "inf" / "-inf".
std::string format_number(double v);

/// Values joined by `sep`.
std::string format_row(const Vec& v, char sep = ' ');

/// Inverse of format_number; throws std::invalid_argument on junk.
double parse_number(std::string_view s);

/// Splits a line on `sep`, trimming surrounding whitespace from each field.
std::vector<std::string> split(std::string_view line, char sep);

}  // namespace lmpc::io
