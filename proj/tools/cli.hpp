#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace padisc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verification = 2;

// "a..b" (inclusive), "a,b,c" (items may themselves be ranges) or
// "pk:k1..k2" for the powers p^k1, ..., p^k2. Every N must be >= 1.
std::vector<std::size_t> parse_schedule(std::string_view text, std::uint32_t p);

// Runs one invocation; args exclude the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padisc::cli
