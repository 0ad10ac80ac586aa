#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jct {

// Column-ordered table of optional doubles; empty cells are masked (written as
// "nan" in CSV, null in JSON) so per-node failures never abort a sweep.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns);

  void reserve(std::size_t rows);
  void add_row(std::vector<std::optional<double>> cells);  // size must match columns
  void set(std::size_t row, std::size_t col, std::optional<double> value);

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::optional<double>& at(std::size_t row, std::size_t col) const;

  // Provenance lines emitted as "# key: value" before the header row.
  void set_meta(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& meta() const { return meta_; }

  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::optional<double>>> cells_;
  std::map<std::string, std::string> meta_;
};

// Shortest decimal form that round-trips a double (printf %.17g trimmed).
std::string format_double(double v);

// RFC-4180 quoting: wrap in quotes when the field contains ',', '"' or '\n'.
std::string csv_escape(const std::string& field);

// FNV-1a 64-bit over a byte string; used to stamp outputs with a config hash.
std::uint64_t fnv1a64(const std::string& bytes);

void write_file(const std::string& path, const std::string& contents);

}  // namespace jct
