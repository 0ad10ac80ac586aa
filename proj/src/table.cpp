#include "jctriangle/table.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace jct {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("table needs at least one column");
}

void ResultTable::reserve(std::size_t rows) { cells_.reserve(rows); }

void ResultTable::add_row(std::vector<std::optional<double>> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("row width does not match the column schema");
  cells_.push_back(std::move(cells));
}

void ResultTable::set(std::size_t row, std::size_t col, std::optional<double> value) {
  cells_.at(row).at(col) = value;
}

const std::optional<double>& ResultTable::at(std::size_t row, std::size_t col) const {
  return cells_.at(row).at(col);
}

void ResultTable::set_meta(const std::string& key, const std::string& value) {
  meta_[key] = value;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (const auto& [key, value] : meta_) {
    out += "# ";
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(columns_[c]);
  }
  out += '\n';
  for (const auto& row : cells_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += row[c] ? format_double(*row[c]) : "nan";
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::to_json() const {
  nlohmann::json j;
  j["meta"] = meta_;
  j["columns"] = columns_;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cells_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) {
      if (cell) r.push_back(*cell);
      else r.push_back(nullptr);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // offset basis
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;  // FNV prime
  }
  return h;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace jct
