#ifndef MULTIBAKER_TABLE_HPP
#define MULTIBAKER_TABLE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace multibaker {

inline constexpr const char* kToolName = "multibaker";
inline constexpr const char* kToolVersion = "0.1.0";

enum class TableFormat { kCsv, kJson };

TableFormat parse_format(const std::string& name);

/// Plot-ready numeric table plus the metadata needed to reproduce it.
/// config_json holds the serialized effective configuration; embedding it
/// in the output lets a run be reconstructed from its own file.
struct Table {
  std::string kind;
  std::string config_json = "{}";
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// CSV with a '#'-prefixed JSON metadata header line.
void write_csv(const Table& table, std::ostream& out);

/// Single JSON document with metadata, columns and rows.
void write_json(const Table& table, std::ostream& out);

/// Writes to a file, or to stdout when path is "-".
void write_table(const Table& table, const std::string& path, TableFormat format);

}  // namespace multibaker

#endif
