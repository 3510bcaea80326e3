#include "sstn/store.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>
#include <type_traits>
#include <vector>

#include "sstn/baselines.hpp"
#include "sstn/calibrate_asy.hpp"
#include "sstn/calibrate_fin.hpp"
#include "sstn/errors.hpp"
#include "sstn/text.hpp"

namespace sstn {

namespace {

constexpr std::string_view kMagic = "sstn-table v1";

void append_vector_line(std::string& out, std::string_view name, const Vector& v) {
  out += name;
  for (Index i = 0; i < v.size(); ++i) {
    out += ' ';
    out += format_double(v[i]);
  }
  out += '\n';
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<std::string_view> next() {
    if (pos_ >= text_.size()) return std::nullopt;
    const auto end = text_.find('\n', pos_);
    std::string_view line;
    if (end == std::string_view::npos) {
      line = text_.substr(pos_);
      pos_ = text_.size();
    } else {
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
    }
    return line;
  }

  /// Everything not yet consumed.
  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

std::string_view expect_field(LineReader& reader, std::string_view name) {
  auto line = reader.next();
  if (!line || line->substr(0, name.size()) != name || line->size() <= name.size() ||
      (*line)[name.size()] != ' ') {
    throw CorruptTable("missing or malformed field '" + std::string(name) + "'");
  }
  return line->substr(name.size() + 1);
}

Vector parse_vector_field(LineReader& reader, std::string_view name, Index count) {
  std::string_view body = expect_field(reader, name);
  Vector out(count);
  Index filled = 0;
  size_t pos = 0;
  while (pos < body.size()) {
    const auto next = body.find(' ', pos);
    const auto token =
        next == std::string_view::npos ? body.substr(pos) : body.substr(pos, next - pos);
    const auto value = parse_double(token);
    if (!value || filled >= count) {
      throw CorruptTable("malformed '" + std::string(name) + "' array");
    }
    out[filled++] = *value;
    pos = next == std::string_view::npos ? body.size() : next + 1;
  }
  if (filled != count) {
    throw CorruptTable("'" + std::string(name) + "' array has wrong length");
  }
  return out;
}

template <class T>
T parse_number_field(LineReader& reader, std::string_view name) {
  const auto body = expect_field(reader, name);
  if constexpr (std::is_same_v<T, double>) {
    if (auto v = parse_double(body)) return *v;
  } else if constexpr (std::is_same_v<T, std::uint64_t>) {
    if (auto v = parse_unsigned(body)) return *v;
  } else {
    if (auto v = parse_integer(body)) return static_cast<T>(*v);
  }
  throw CorruptTable("malformed numeric field '" + std::string(name) + "'");
}

}  // namespace

std::string serialize_table(const CalibrationTable& table) {
  std::string payload;
  payload.reserve(static_cast<size_t>(table.replicates.size()) * 20 + 1024);
  append_vector_line(payload, "mu", table.mu);
  append_vector_line(payload, "sigma", table.sigma);
  for (Index b = 0; b < table.replicates.size(); ++b) {
    payload += format_double(table.replicates[b]);
    payload += '\n';
  }

  const TableKey& key = table.key;
  std::string out;
  out.reserve(payload.size() + 256);
  out += kMagic;
  out += '\n';
  out += "fingerprint " + fingerprint(key) + '\n';
  out += "kind " + std::string(table_kind_name(key.kind)) + '\n';
  out += "size " + std::to_string(key.sample_size) + '\n';
  out += "levels " + std::to_string(key.max_level) + '\n';
  out += "grid " + std::to_string(key.grid_size) + '\n';
  out += "bound " + format_double(key.bound) + '\n';
  out += "beta " + format_double(key.beta) + '\n';
  out += "replicates " + std::to_string(key.replicates) + '\n';
  out += "seed " + std::to_string(key.seed) + '\n';
  out += "checksum " + to_hex(fnv1a64(payload)) + '\n';
  out += payload;
  return out;
}

CalibrationTable parse_table(std::string_view text) {
  LineReader reader(text);
  const auto magic = reader.next();
  if (!magic || *magic != kMagic) {
    throw CorruptTable("unrecognized table header");
  }
  const std::string stored_fingerprint{expect_field(reader, "fingerprint")};

  TableKey key;
  const auto kind = parse_table_kind(expect_field(reader, "kind"));
  if (!kind) throw CorruptTable("unknown table kind");
  key.kind = *kind;
  key.sample_size = parse_number_field<int>(reader, "size");
  key.max_level = parse_number_field<int>(reader, "levels");
  key.grid_size = parse_number_field<int>(reader, "grid");
  key.bound = parse_number_field<double>(reader, "bound");
  key.beta = parse_number_field<double>(reader, "beta");
  key.replicates = parse_number_field<int>(reader, "replicates");
  key.seed = parse_number_field<std::uint64_t>(reader, "seed");
  if (fingerprint(key) != stored_fingerprint) {
    throw CorruptTable("fingerprint does not match stored configuration");
  }
  if (key.max_level < 1 || key.replicates < 1) {
    throw CorruptTable("implausible table dimensions");
  }

  const std::string stored_checksum{expect_field(reader, "checksum")};
  if (to_hex(fnv1a64(reader.rest())) != stored_checksum) {
    throw CorruptTable("checksum mismatch (file truncated or edited)");
  }

  CalibrationTable table;
  table.key = key;
  table.mu = parse_vector_field(reader, "mu", key.max_level);
  table.sigma = parse_vector_field(reader, "sigma", key.max_level);
  table.replicates.resize(key.replicates);
  for (Index b = 0; b < key.replicates; ++b) {
    const auto line = reader.next();
    const auto value = line ? parse_double(*line) : std::nullopt;
    if (!value) throw CorruptTable("malformed replicate line");
    table.replicates[b] = *value;
  }
  if (reader.next()) throw CorruptTable("trailing content after replicates");
  validate(table);
  return table;
}

std::string table_file_name(const TableKey& key) {
  return fingerprint(key) + ".sstn-table";
}

std::filesystem::path save(const CalibrationTable& table,
                           const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoFailure("cannot create cache directory " + dir.string());

  const std::filesystem::path final_path = dir / table_file_name(table.key);
  static std::atomic<unsigned> counter{0};
  const std::filesystem::path tmp_path =
      final_path.string() + ".tmp" + std::to_string(counter.fetch_add(1)) + "-" +
      std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open " + tmp_path.string() + " for writing");
    const std::string text = serialize_table(table);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.flush()) {
      throw IoFailure("write failed for " + tmp_path.string());
    }
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp_path, ec);
    throw IoFailure("cannot move table into place at " + final_path.string());
  }
  return final_path;
}

std::optional<CalibrationTable> load(const TableKey& key,
                                     const std::filesystem::path& dir) {
  const std::filesystem::path path = dir / table_file_name(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoFailure("read failed for " + path.string());
  CalibrationTable table = parse_table(buffer.str());
  if (!(table.key == key)) return std::nullopt;  // different configuration
  return table;
}

TableStore::TableStore(std::filesystem::path cache_dir, int threads)
    : cache_dir_(std::move(cache_dir)), threads_(threads) {}

const CalibrationTable& TableStore::acquire(const TableKey& key,
                                            TableSource* source) {
  std::lock_guard lock(mutex_);
  const std::string id = fingerprint(key);
  if (auto it = tables_.find(id); it != tables_.end()) {
    if (source) *source = TableSource::Memory;
    return it->second;
  }

  if (!cache_dir_.empty()) {
    if (auto table = load(key, cache_dir_)) {
      if (source) *source = TableSource::Disk;
      return tables_.emplace(id, std::move(*table)).first->second;
    }
  }

  CalibrationTable built;
  try {
    switch (key.kind) {
      case TableKind::Asymptotic:
        built = calibrate_asymptotic(key.to_config(), threads_);
        break;
      case TableKind::Finite: {
        SstnConfig config = key.to_config();
        if (config.finite_threshold <= key.sample_size) {
          config.finite_threshold = key.sample_size + 1;
        }
        built = calibrate_finite(key.sample_size, config, threads_);
        break;
      }
      case TableKind::Lilliefors:
        built = calibrate_lilliefors(key.sample_size, key.to_config(), threads_);
        break;
    }
  } catch (const IoFailure&) {
    throw;
  } catch (const Error& e) {
    throw CalibrationUnavailable("cannot build table " + id + ": " + e.what());
  }

  if (!cache_dir_.empty()) {
    save(built, cache_dir_);
  }
  if (source) *source = TableSource::Built;
  return tables_.emplace(id, std::move(built)).first->second;
}

}  // namespace sstn
