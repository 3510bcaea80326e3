#ifndef SSTN_CALIBRATION_TABLE_HPP
#define SSTN_CALIBRATION_TABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sstn/config.hpp"
#include "sstn/types.hpp"

namespace sstn {

enum class TableKind {
  Asymptotic,  ///< Gaussian-limit simulation, shared by all n above threshold
  Finite,      ///< sample-size-specific null replicates
  Lilliefors,  ///< null replicates of the Lilliefors statistic (baseline)
};

std::string_view table_kind_name(TableKind kind);
std::optional<TableKind> parse_table_kind(std::string_view name);

/// Everything that determines the content of a calibration table.  Equal
/// keys produce equal fingerprints; changing any field changes the
/// fingerprint with overwhelming probability.
struct TableKey {
  TableKind kind = TableKind::Asymptotic;
  int sample_size = 0;  ///< n for finite/lilliefors tables, 0 otherwise
  int max_level = 0;
  int grid_size = 0;
  double bound = 0;
  double beta = 0;
  int replicates = 0;
  std::uint64_t seed = 0;

  static TableKey asymptotic(const SstnConfig& config);
  static TableKey finite(int sample_size, const SstnConfig& config);
  static TableKey lilliefors(int sample_size, const SstnConfig& config);

  /// Rebuilds a config carrying this key's tuning parameters.
  SstnConfig to_config() const;

  bool operator==(const TableKey&) const = default;
};

/// Canonical text form of a key (the hashed serialization).
std::string canonical_key(const TableKey& key);

/// 16-hex-digit stable hash of the canonical key.
std::string fingerprint(const TableKey& key);

/// Monte Carlo approximation of a null distribution: per-level moments plus
/// the sorted replicate statistics they standardize.
struct CalibrationTable {
  TableKey key;
  Vector mu;          ///< per-level null means
  Vector sigma;       ///< per-level null standard deviations, all positive
  Vector replicates;  ///< sorted ascending, length key.replicates
};

/// Checks the structural invariants (lengths, positivity, sortedness,
/// finiteness); throws CorruptTable on violation.
void validate(const CalibrationTable& table);

}  // namespace sstn

#endif
