#ifndef SSTN_IO_HPP
#define SSTN_IO_HPP

#include <filesystem>
#include <string_view>
#include <vector>

namespace sstn {

/// Parses newline-separated decimal observations.  Lines starting with '#'
/// and blank lines are skipped; a single non-numeric first line is accepted
/// as a CSV header.  Throws InvalidSample with the offending line number on
/// parse failures.
std::vector<double> parse_observations(std::string_view text);

/// Reads and parses an observation file.  Throws IoFailure on read errors.
std::vector<double> read_observations(const std::filesystem::path& path);

}  // namespace sstn

#endif
