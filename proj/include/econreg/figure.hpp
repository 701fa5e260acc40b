#pragma once

#include <string>
#include <utility>
#include <vector>

#include "econreg/dataset.hpp"

namespace econreg::report {

enum class FigureKind { line, scatter };

struct FigureSpec {
  FigureKind kind = FigureKind::scatter;
  std::string x_name;
  std::string y_name;
  std::vector<std::pair<double, double>> points;
  std::string title;
};

/// Scatter of two dataset columns, one point per row.
FigureSpec scatter_spec(const Dataset& ds, const std::string& x, const std::string& y);

/// A series against its years.
FigureSpec line_spec(const Series& s);

/// Standalone SVG 1.1 document. Scatter points are <circle class="mark">,
/// line figures a single <polyline class="mark"> in input order. Constant
/// coordinates get a padded axis; zero points throws DegenerateRange.
std::string render_figure(const FigureSpec& spec);

}  // namespace econreg::report
