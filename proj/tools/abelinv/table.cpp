#include "abelinv/table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "abel/error.hpp"

namespace abelinv {
namespace {

using abel::Errc;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_cell(std::string_view cell, std::size_t line_no) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
    abel::fail(Errc::parse_error, "line " + std::to_string(line_no) + ": not a number: '" +
                                      std::string(cell) + "'");
  }
  if (!std::isfinite(v)) {
    abel::fail(Errc::parse_error, "line " + std::to_string(line_no) + ": non-finite value");
  }
  return v;
}

}  // namespace

bool Table::has(std::string_view name) const noexcept {
  for (const auto& h : header) {
    if (h == name) return true;
  }
  return false;
}

const std::vector<double>& Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  abel::fail(Errc::parse_error, "missing column '" + std::string(name) + "'");
}

void Table::add(std::string name, std::vector<double> values) {
  header.push_back(std::move(name));
  columns.push_back(std::move(values));
}

Table parse_table(std::string_view text) {
  Table t;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;

    const auto cells = split(line);
    if (!have_header) {
      for (const auto c : cells) {
        if (c.empty()) abel::fail(Errc::parse_error, "line 1: empty column name");
        t.header.emplace_back(c);
      }
      t.columns.resize(t.header.size());
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) {
      abel::fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(t.header.size()) + " fields, got " +
                                        std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      t.columns[c].push_back(parse_cell(cells[c], line_no));
    }
  }
  if (!have_header) abel::fail(Errc::parse_error, "missing header row");
  return t;
}

Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) abel::fail(Errc::file_not_found, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_table(ss.str());
  } catch (const abel::Error& e) {
    abel::fail(e.code(), path.string() + ": " + e.what());
  }
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, 17);
  return {buf.data(), ptr};
}

std::string format_table(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out += ',';
    out += table.header[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += format_double(table.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

void write_table(const Table& table, const std::filesystem::path& path) {
  for (const auto& col : table.columns) {
    if (col.size() != table.rows()) abel::fail(Errc::invalid_argument, "table columns differ in length");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) abel::fail(Errc::io_error, "cannot write " + path.string());
  out << format_table(table);
  if (!out) abel::fail(Errc::io_error, "write failed for " + path.string());
}

}  // namespace abelinv
