#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "econreg/descriptive.hpp"
#include "econreg/ols.hpp"

namespace econreg::report {

struct HeaderCell {
  std::string text;
  int span = 1;

  friend bool operator==(const HeaderCell&, const HeaderCell&) = default;
};

struct Footnote {
  /// "a", "b", or "**".
  std::string marker;
  std::string text;

  friend bool operator==(const Footnote&, const Footnote&) = default;
};

/// A layout-ready table. Header tiers are listed top to bottom; each tier's
/// spans add up to the number of leaf columns. Footnote markers appear in
/// cells as "^a" or a trailing "**".
struct ReportTable {
  std::string title;
  std::vector<std::vector<HeaderCell>> column_headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<Footnote> footnotes;

  std::size_t leaf_columns() const;
  /// Throws InvalidArgument if the grid is ragged, a header tier has the
  /// wrong total span, or a marker has no footnote.
  void validate() const;

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

struct FormatOptions {
  /// Full precision numbers instead of SPSS-style 3-decimal cells.
  bool plain = false;
  /// Display labels for variable names ("SP500" -> "STANDARD AND POOR 500 (SP500)").
  std::map<std::string, std::string> labels;

  std::string label(const std::string& name) const;
};

ReportTable render_correlation_table(const CorrelationMatrix& m, const FormatOptions& options = {});

struct RegressionTables {
  ReportTable model_summary;
  ReportTable anova;
  ReportTable coefficients;
};

RegressionTables render_regression_tables(const RegressionModel& model, const FormatOptions& options = {});

/// Fixed-width text grid with footnotes underneath.
std::string to_text(const ReportTable& table);

}  // namespace econreg::report
