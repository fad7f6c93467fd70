// table_io.hpp — CSV and SVG emission for sweep tables.

#pragma once

#include <ostream>
#include <string>

#include "ringabs/runner.hpp"

namespace ringabs::io {

// 17 significant digits, '.' decimal separator.
std::string format_number(double v);

// CSV: '#'-prefixed metadata lines (always including the units line), a
// header row naming the axes and the value, then rows in row-major
// axis1-outer order. Divergent cells render as the literal token `divergent`.
// 1-D tables (singleton axis2 named "column") omit the axis2 column.
void emit_csv(const runner::SweepTable& table, std::ostream& out);
void write_csv(const runner::SweepTable& table, const std::string& path);

struct HeatmapOptions {
  double vmin = 0.0;
  double vmax = coherent_absorption_bound;  // linear color scale ceiling
  int cell_px = 6;
};

// Color ramp used by the heatmap, exposed so outputs are testable.
std::string heatmap_color(double value, const HeatmapOptions& opts);

// Self-contained SVG heatmap with log-decade axis labels; divergent cells are
// marked with a distinct cross-hatch.
std::string render_heatmap_svg(const runner::SweepTable& table, const HeatmapOptions& opts);
void write_heatmap(const runner::SweepTable& table, const std::string& path,
                   const HeatmapOptions& opts);

}  // namespace ringabs::io
