#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelinv {

/// Column-oriented numeric CSV table with a header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  [[nodiscard]] std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  [[nodiscard]] bool has(std::string_view name) const noexcept;
  /// Throws abel::Error(parse_error) naming the missing column.
  [[nodiscard]] const std::vector<double>& column(std::string_view name) const;

  void add(std::string name, std::vector<double> values);
};

/// Parses a UTF-8 CSV file. Rejects ragged rows, non-numeric cells and
/// non-finite values with parse_error naming the offending line.
[[nodiscard]] Table read_table(const std::filesystem::path& path);
[[nodiscard]] Table parse_table(std::string_view text);

/// Writes every value with 17 significant digits, which round-trips doubles exactly.
void write_table(const Table& table, const std::filesystem::path& path);
[[nodiscard]] std::string format_table(const Table& table);

[[nodiscard]] std::string format_double(double v);

}  // namespace abelinv
