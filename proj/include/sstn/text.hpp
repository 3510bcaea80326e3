#ifndef SSTN_TEXT_HPP
#define SSTN_TEXT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sstn {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_integer(std::string_view text);
std::optional<std::uint64_t> parse_unsigned(std::string_view text);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view data);

std::string to_hex(std::uint64_t value);

}  // namespace sstn

#endif
