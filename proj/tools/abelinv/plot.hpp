#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace abelinv {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Long-format CSV "series,x,y", one row per point.
void emit_plot_data(std::span<const Series> series, const std::filesystem::path& path);
[[nodiscard]] std::string format_plot_data(std::span<const Series> series);

/// Minimal static SVG: axes box, one polyline per series and a legend.
void write_svg(std::span<const Series> series, const std::filesystem::path& path,
               const std::string& title = {});
[[nodiscard]] std::string format_svg(std::span<const Series> series, const std::string& title = {});

}  // namespace abelinv
