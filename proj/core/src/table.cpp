#include "multibaker/table.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <system_error>

#include "json.hpp"

#include "multibaker/errors.hpp"

namespace multibaker {

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json") return TableFormat::kJson;
  throw config_error("unknown output format: " + name);
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

nlohmann::json metadata(const Table& table) {
  nlohmann::json meta;
  meta["config"] = nlohmann::json::parse(table.config_json);
  meta["kind"] = table.kind;
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  return meta;
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  out << "# " << metadata(table).dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::json doc = metadata(table);
  doc["columns"] = table.columns;
  doc["rows"] = table.rows;  // NaN serializes as null
  out << doc.dump(2) << '\n';
}

void write_table(const Table& table, const std::string& path, TableFormat format) {
  const auto emit = [&](std::ostream& out) {
    format == TableFormat::kCsv ? write_csv(table, out) : write_json(table, out);
    if (!out) throw io_error(path, "write failed");
  };
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error(path, "cannot open for writing");
  emit(file);
  file.close();
  if (!file) throw io_error(path, "write failed");
}

}  // namespace multibaker
