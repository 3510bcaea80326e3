#include "sstn/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "sstn/errors.hpp"
#include "sstn/text.hpp"

namespace sstn {

namespace {

std::string_view trim(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

std::vector<double> parse_observations(std::string_view text) {
  std::vector<double> values;
  size_t line_number = 0;
  size_t pos = 0;
  bool saw_data = false;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_number;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (const auto value = parse_double(line)) {
      values.push_back(*value);
      saw_data = true;
      continue;
    }
    // A single-column CSV header is tolerated on the first data-bearing line.
    if (!saw_data) {
      saw_data = true;
      continue;
    }
    throw InvalidSample("line " + std::to_string(line_number) +
                        ": cannot parse '" + std::string(line) + "' as a number");
  }
  return values;
}

std::vector<double> read_observations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoFailure("read failed for " + path.string());
  return parse_observations(buffer.str());
}

}  // namespace sstn
