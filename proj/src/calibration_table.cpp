#include "sstn/calibration_table.hpp"

#include <algorithm>
#include <cmath>

#include "sstn/errors.hpp"
#include "sstn/text.hpp"

namespace sstn {

std::string_view table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::Asymptotic: return "asymptotic";
    case TableKind::Finite: return "finite";
    case TableKind::Lilliefors: return "lilliefors";
  }
  return "unknown";
}

std::optional<TableKind> parse_table_kind(std::string_view name) {
  if (name == "asymptotic") return TableKind::Asymptotic;
  if (name == "finite") return TableKind::Finite;
  if (name == "lilliefors") return TableKind::Lilliefors;
  return std::nullopt;
}

TableKey TableKey::asymptotic(const SstnConfig& config) {
  return {TableKind::Asymptotic, 0,           config.max_level, config.grid_size,
          config.bound,          config.beta, config.replicates, config.seed};
}

TableKey TableKey::finite(int sample_size, const SstnConfig& config) {
  return {TableKind::Finite, sample_size, config.max_level, config.grid_size,
          config.bound,      config.beta, config.replicates, config.seed};
}

TableKey TableKey::lilliefors(int sample_size, const SstnConfig& config) {
  return {TableKind::Lilliefors, sample_size, 1,                 config.grid_size,
          config.bound,          config.beta, config.replicates, config.seed};
}

SstnConfig TableKey::to_config() const {
  SstnConfig config;
  config.max_level = max_level;
  config.grid_size = grid_size;
  config.bound = bound;
  config.beta = beta;
  config.replicates = replicates;
  config.seed = seed;
  return config;
}

std::string canonical_key(const TableKey& key) {
  std::string out = "sstn-table|kind=";
  out += table_kind_name(key.kind);
  out += "|n=" + std::to_string(key.sample_size);
  out += "|M=" + std::to_string(key.max_level);
  out += "|H=" + std::to_string(key.grid_size);
  out += "|T=" + format_double(key.bound);
  out += "|beta=" + format_double(key.beta);
  out += "|B=" + std::to_string(key.replicates);
  out += "|seed=" + std::to_string(key.seed);
  return out;
}

std::string fingerprint(const TableKey& key) {
  return to_hex(fnv1a64(canonical_key(key)));
}

void validate(const CalibrationTable& table) {
  const auto levels = table.mu.size();
  if (table.sigma.size() != levels) {
    throw CorruptTable("mu/sigma length mismatch");
  }
  if (levels != table.key.max_level) {
    throw CorruptTable("level count does not match key");
  }
  if (table.replicates.size() != table.key.replicates) {
    throw CorruptTable("replicate count does not match key");
  }
  if (!table.mu.allFinite() || !table.sigma.allFinite() ||
      !table.replicates.allFinite()) {
    throw CorruptTable("non-finite table entries");
  }
  if ((table.sigma.array() <= 0).any()) {
    throw CorruptTable("non-positive sigma entry");
  }
  if (!std::is_sorted(table.replicates.begin(), table.replicates.end())) {
    throw CorruptTable("replicates not sorted");
  }
}

}  // namespace sstn
