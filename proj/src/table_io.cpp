#include "ringabs/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ringabs/errors.hpp"

namespace ringabs::io {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

bool single_column(const runner::SweepTable& t) {
  return t.axis2.values.size() == 1 && t.axis2.name == "column" && t.axis2_companions.empty();
}

}  // namespace

void emit_csv(const runner::SweepTable& table, std::ostream& out) {
  out << "# table: " << table.name << "\n";
  out << "# units: rates in Gamma0, lengths in lambda0\n";
  for (const auto& [key, value] : table.metadata) out << "# " << key << ": " << value << "\n";

  const bool one_col = single_column(table);
  out << table.axis1.name;
  if (!one_col) {
    if (table.axis2_companions.empty()) {
      out << "," << table.axis2.name;
    } else {
      for (const auto& c : table.axis2_companions) out << "," << c.name;
    }
  }
  out << "," << table.value_name << "\n";

  for (int i = 0; i < table.rows(); ++i)
    for (int j = 0; j < table.cols(); ++j) {
      out << format_number(table.axis1.values[i]);
      if (!one_col) {
        if (table.axis2_companions.empty()) {
          out << "," << format_number(table.axis2.values[j]);
        } else {
          for (const auto& c : table.axis2_companions) out << "," << format_number(c.values[j]);
        }
      }
      if (table.is_divergent(i, j))
        out << ",divergent\n";
      else
        out << "," << format_number(table.values(i, j)) << "\n";
    }
}

void write_csv(const runner::SweepTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  emit_csv(table, f);
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

namespace {

struct Rgb {
  int r, g, b;
};

// Compact viridis-like ramp; linear interpolation between fixed stops.
constexpr Rgb kStops[] = {{68, 1, 84},    {71, 44, 122},  {59, 81, 139},  {44, 113, 142},
                          {33, 144, 141}, {39, 173, 129}, {92, 200, 99},  {170, 220, 50},
                          {253, 231, 37}};

Rgb ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  constexpr int n = static_cast<int>(std::size(kStops)) - 1;
  const double x = t * n;
  const int i = std::min(static_cast<int>(x), n - 1);
  const double f = x - i;
  const auto lerp = [f](int a, int b) { return static_cast<int>(std::lround(a + f * (b - a))); };
  return {lerp(kStops[i].r, kStops[i + 1].r), lerp(kStops[i].g, kStops[i + 1].g),
          lerp(kStops[i].b, kStops[i + 1].b)};
}

// Decade tick labels for a log axis; falls back to endpoints for linear data.
std::vector<std::pair<double, std::string>> axis_ticks(const std::vector<double>& values) {
  std::vector<std::pair<double, std::string>> ticks;
  if (values.size() < 2 || values.front() <= 0.0 || values.back() <= 0.0) return ticks;
  const double lo = std::log10(values.front()), hi = std::log10(values.back());
  for (int e = static_cast<int>(std::ceil(lo - 1e-9)); e <= hi + 1e-9; ++e) {
    const double frac = (e - lo) / (hi - lo);
    char label[24];
    std::snprintf(label, sizeof label, "1e%d", e);
    ticks.emplace_back(frac, label);
  }
  return ticks;
}

}  // namespace

std::string heatmap_color(double value, const HeatmapOptions& opts) {
  const double t = (value - opts.vmin) / (opts.vmax - opts.vmin);
  const Rgb c = ramp(t);
  char buf[32];
  std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", c.r, c.g, c.b);
  return buf;
}

std::string render_heatmap_svg(const runner::SweepTable& table, const HeatmapOptions& opts) {
  const int rows = table.rows(), cols = table.cols();
  const int cw = opts.cell_px;
  const int margin_left = 64, margin_bottom = 40, margin_top = 28, margin_right = 16;
  const int plot_w = cols * cw, plot_h = rows * cw;
  const int width = margin_left + plot_w + margin_right;
  const int height = margin_top + plot_h + margin_bottom;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "<title>" << table.name << " (" << table.value_name << ")</title>\n";
  s << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // axis1 runs upward (row 0 at the bottom), axis2 to the right.
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const int x = margin_left + j * cw;
      const int y = margin_top + (rows - 1 - i) * cw;
      if (table.is_divergent(i, j)) {
        s << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\"" << cw
          << "\" fill=\"rgb(220,220,220)\"/>";
        s << "<path d=\"M" << x << " " << y << " l" << cw << " " << cw << " M" << x + cw << " "
          << y << " l-" << cw << " " << cw << "\" stroke=\"rgb(120,120,120)\" stroke-width=\"1\"/>\n";
        continue;
      }
      s << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\"" << cw
        << "\" fill=\"" << heatmap_color(table.values(i, j), opts) << "\"/>\n";
    }

  s << "<text x=\"" << margin_left << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"12\">"
    << table.name << ": " << table.value_name << " (color 0 to " << format_number(opts.vmax)
    << ")</text>\n";
  for (const auto& [frac, label] : axis_ticks(table.axis2.values)) {
    const double x = margin_left + frac * plot_w;
    s << "<text x=\"" << x << "\" y=\"" << margin_top + plot_h + 16
      << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << label
      << "</text>\n";
  }
  for (const auto& [frac, label] : axis_ticks(table.axis1.values)) {
    const double y = margin_top + plot_h - frac * plot_h;
    s << "<text x=\"" << margin_left - 6 << "\" y=\"" << y + 3
      << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" << label
      << "</text>\n";
  }
  s << "<text x=\"" << margin_left + plot_w / 2 << "\" y=\"" << height - 6
    << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
    << (table.axis2_companions.empty() ? table.axis2.name : table.axis2_companions.front().name)
    << "</text>\n";
  s << "<text x=\"12\" y=\"" << margin_top + plot_h / 2
    << "\" font-family=\"sans-serif\" font-size=\"11\" transform=\"rotate(-90 12 "
    << margin_top + plot_h / 2 << ")\" text-anchor=\"middle\">" << table.axis1.name << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

void write_heatmap(const runner::SweepTable& table, const std::string& path,
                   const HeatmapOptions& opts) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << render_heatmap_svg(table, opts);
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace ringabs::io
