#ifndef SSTN_STORE_HPP
#define SSTN_STORE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "sstn/calibration_table.hpp"

namespace sstn {

/// Versioned text serialization; bit-exact round-trip at full double
/// precision via shortest round-trip decimals.
std::string serialize_table(const CalibrationTable& table);

/// Inverse of serialize_table; throws CorruptTable on any format, checksum,
/// length, ordering or fingerprint inconsistency.
CalibrationTable parse_table(std::string_view text);

/// File name a key's table is stored under: `<fingerprint>.sstn-table`.
std::string table_file_name(const TableKey& key);

/// Writes the table into dir (created if absent) with an atomic
/// write-temp-then-rename; returns the final path.  Throws IoFailure.
std::filesystem::path save(const CalibrationTable& table,
                           const std::filesystem::path& dir);

/// Loads the table for a key; nullopt when no file exists or the stored key
/// does not match (a different configuration).  Throws CorruptTable when a
/// file exists but fails validation.
std::optional<CalibrationTable> load(const TableKey& key,
                                     const std::filesystem::path& dir);

enum class TableSource { Memory, Disk, Built };

/// Cache of calibration tables: memory first, then the cache directory (when
/// set), then a fresh build which is persisted back.  Builds are serialized;
/// returned references stay valid for the lifetime of the store and may be
/// read concurrently.
class TableStore {
 public:
  explicit TableStore(std::filesystem::path cache_dir = {}, int threads = 0);

  /// Fetches or builds the table for a key.  Throws CalibrationUnavailable
  /// when the table cannot be produced.
  const CalibrationTable& acquire(const TableKey& key,
                                  TableSource* source = nullptr);

  const std::filesystem::path& cache_dir() const { return cache_dir_; }

 private:
  std::filesystem::path cache_dir_;
  int threads_;
  std::mutex mutex_;
  std::map<std::string, CalibrationTable> tables_;
};

}  // namespace sstn

#endif
