#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gdplab {

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Static line chart, one polyline per series, legend in the top-right corner.
// Presentation only: nothing downstream parses these files.
void write_line_chart(std::ostream& out, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      std::span<const ChartSeries> series);

} // namespace gdplab
