#include "abelinv/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include "abel/error.hpp"
#include "abelinv/table.hpp"

namespace abelinv {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 50.0;
constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                "#ff7f0e", "#9467bd", "#8c564b"};

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) abel::fail(abel::Errc::io_error, "cannot write " + path.string());
  out << text;
  if (!out) abel::fail(abel::Errc::io_error, "write failed for " + path.string());
}

std::string fixed(double v) {
  // Two decimals are plenty for pixel coordinates.
  const double r = std::round(v * 100.0) / 100.0;
  return format_double(r == 0.0 ? 0.0 : r);
}

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_plot_data(std::span<const Series> series) {
  std::string out = "series,x,y\n";
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) {
      abel::fail(abel::Errc::invalid_argument, "series '" + s.name + "' has mismatched x/y lengths");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out += s.name + ',' + format_double(s.x[i]) + ',' + format_double(s.y[i]) + '\n';
    }
  }
  return out;
}

void emit_plot_data(std::span<const Series> series, const std::filesystem::path& path) {
  write_text(format_plot_data(series), path);
}

std::string format_svg(std::span<const Series> series, const std::string& title) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const auto& s : series) {
    for (const double v : s.x) {
      x_lo = std::min(x_lo, v);
      x_hi = std::max(x_hi, v);
    }
    for (const double v : s.y) {
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  if (!(x_hi > x_lo)) {
    x_lo = std::isfinite(x_lo) ? x_lo - 1.0 : 0.0;
    x_hi = x_lo + 2.0;
  }
  if (!(y_hi > y_lo)) {
    y_lo = std::isfinite(y_lo) ? y_lo - 1.0 : 0.0;
    y_hi = y_lo + 2.0;
  }
  const double pw = kWidth - 2.0 * kMargin;
  const double ph = kHeight - 2.0 * kMargin;
  auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double y) { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  out += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += "<rect x=\"50\" y=\"50\" width=\"540\" height=\"300\" fill=\"none\" stroke=\"black\"/>\n";
  if (!title.empty()) {
    out += "<text x=\"320\" y=\"30\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) + "</text>\n";
  }
  out += "<text x=\"50\" y=\"368\" font-size=\"11\">" + format_double(x_lo) + "</text>\n";
  out += "<text x=\"590\" y=\"368\" font-size=\"11\" text-anchor=\"end\">" + format_double(x_hi) + "</text>\n";
  out += "<text x=\"45\" y=\"350\" font-size=\"11\" text-anchor=\"end\">" + format_double(y_lo) + "</text>\n";
  out += "<text x=\"45\" y=\"58\" font-size=\"11\" text-anchor=\"end\">" + format_double(y_hi) + "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % kColors.size()];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      if (i) out += ' ';
      out += fixed(px(series[s].x[i])) + ',' + fixed(py(series[s].y[i]));
    }
    out += "\"/>\n";
    const std::string ly = format_double(70.0 + 16.0 * static_cast<double>(s));
    out += "<text x=\"570\" y=\"" + ly + "\" font-size=\"12\" text-anchor=\"end\" fill=\"" + color + "\">" +
           escape(series[s].name) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(std::span<const Series> series, const std::filesystem::path& path,
               const std::string& title) {
  write_text(format_svg(series, title), path);
}

}  // namespace abelinv
