#pragma once

#include <ostream>
#include <span>
#include <string>

namespace mpk::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 for domain errors (no
// inverse, invalid key, point off the curve, failed verification) and 2 for
// usage errors (unknown flags, malformed numbers, unreadable files).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mpk::cli
