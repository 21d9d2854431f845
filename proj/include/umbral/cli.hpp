#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral::cli {

// Exit codes: 0 success, 1 verification failure, 2 argument error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts "p", "p/q" and plain decimals such as "-0.25"; the value is exact.
Rational parse_number(std::string_view text);

}  // namespace umbral::cli
