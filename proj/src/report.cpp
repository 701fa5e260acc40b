#include "econreg/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "econreg/error.hpp"
#include "econreg/format.hpp"

namespace econreg::report {

namespace {

// Markers referenced by a cell: "^a" style suffixes and a trailing "**".
void collect_markers(const std::string& s, std::set<std::string>& out) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '^' && std::isalpha(static_cast<unsigned char>(s[i + 1]))) out.insert(s.substr(i + 1, 1));
  }
  if (s.size() >= 2 && s.ends_with("**")) out.insert("**");
}

struct Numbers {
  bool plain;

  std::string stat(double v) const { return plain ? fmt::plain(v) : fmt::fixed(v, 3); }
  std::string sum(double v) const { return plain ? fmt::plain(v) : fmt::large(v); }
  std::string see(double v) const { return plain ? fmt::plain(v) : fmt::significant(v, 6); }
};

std::string predictor_footnote(const RegressionModel& model, const FormatOptions& options) {
  std::string s = "Predictors: (Constant)";
  for (auto it = model.predictors.rbegin(); it != model.predictors.rend(); ++it) s += ", " + options.label(*it);
  return s;
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.' ||
                        (s.front() == '-' && s.size() > 1));
}

}  // namespace

std::string FormatOptions::label(const std::string& name) const {
  auto it = labels.find(name);
  return it == labels.end() ? name : it->second;
}

std::size_t ReportTable::leaf_columns() const {
  if (!column_headers.empty()) {
    std::size_t total = 0;
    for (const auto& h : column_headers.back()) total += static_cast<std::size_t>(h.span);
    return total;
  }
  return rows.empty() ? 0 : rows.front().size();
}

void ReportTable::validate() const {
  const std::size_t width = leaf_columns();
  for (std::size_t t = 0; t < column_headers.size(); ++t) {
    std::size_t total = 0;
    for (const auto& h : column_headers[t]) {
      if (h.span < 1) throw Error(ErrorKind::InvalidArgument, "header span must be >= 1");
      total += static_cast<std::size_t>(h.span);
    }
    if (total != width) {
      throw Error(ErrorKind::InvalidArgument, "header tier " + std::to_string(t) + " spans " +
                                                  std::to_string(total) + " of " + std::to_string(width) +
                                                  " columns");
    }
  }
  std::set<std::string> used;
  collect_markers(title, used);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw Error(ErrorKind::InvalidArgument,
                  "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " cells, expected " +
                      std::to_string(width));
    }
    for (const auto& cell : rows[r]) collect_markers(cell, used);
  }
  for (const auto& marker : used) {
    const bool found = std::any_of(footnotes.begin(), footnotes.end(),
                                   [&](const Footnote& f) { return f.marker == marker; });
    if (!found) throw Error(ErrorKind::InvalidArgument, "marker '" + marker + "' has no footnote");
  }
}

ReportTable render_correlation_table(const CorrelationMatrix& m, const FormatOptions& options) {
  const Numbers num{options.plain};
  const std::size_t k = m.size();
  ReportTable t;
  t.title = "Correlations";
  std::vector<HeaderCell> header{{"", 1}, {"", 1}};
  for (const auto& name : m.variable_names) header.push_back({options.label(name), 1});
  t.column_headers.push_back(std::move(header));

  bool any_flag = false;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::string> r_row{options.label(m.variable_names[i]), "Pearson Correlation"};
    std::vector<std::string> p_row{"", "Sig. (2-tailed)"};
    std::vector<std::string> s_row{"", "Sum of Squares and Cross-products"};
    std::vector<std::string> c_row{"", "Covariance"};
    std::vector<std::string> n_row{"", "N"};
    for (std::size_t j = 0; j < k; ++j) {
      const auto& cell = m.at(i, j);
      if (i == j) {
        r_row.push_back("1");
        p_row.push_back(".");
      } else {
        std::string r = num.stat(cell.r);
        if (cell.significant_01) {
          r += "**";
          any_flag = true;
        }
        r_row.push_back(std::move(r));
        p_row.push_back(num.stat(cell.p_two_tailed));
      }
      s_row.push_back(num.sum(cell.sscp));
      c_row.push_back(num.sum(cell.covariance));
      n_row.push_back(std::to_string(cell.n));
    }
    for (auto* row : {&r_row, &p_row, &s_row, &c_row, &n_row}) t.rows.push_back(std::move(*row));
  }
  if (any_flag) t.footnotes.push_back({"**", "Correlation is significant at the 0.01 level (2-tailed)."});
  return t;
}

RegressionTables render_regression_tables(const RegressionModel& model, const FormatOptions& options) {
  const Numbers num{options.plain};
  const Footnote predictors_note{"a", predictor_footnote(model, options)};
  const Footnote dependent_note{"b", "Dependent Variable: " + options.label(model.dependent)};
  RegressionTables out;

  auto& s = out.model_summary;
  s.title = "Model Summary^b";
  s.column_headers.push_back({{"Model", 1}, {"R", 1}, {"R Square", 1}, {"Adjusted R Square", 1},
                              {"Std. Error of the Estimate", 1}});
  s.rows.push_back({"1", num.stat(model.summary.r) + "^a", num.stat(model.summary.r_square),
                    num.stat(model.summary.adj_r_square), num.see(model.summary.std_error_estimate)});
  s.footnotes = {predictors_note, dependent_note};

  const auto& a = model.anova;
  auto& an = out.anova;
  an.title = "ANOVA^b";
  an.column_headers.push_back(
      {{"Model", 1}, {"", 1}, {"Sum of Squares", 1}, {"df", 1}, {"Mean Square", 1}, {"F", 1}, {"Sig.", 1}});
  an.rows.push_back({"1", "Regression", num.sum(a.ss_regression), std::to_string(a.df_regression),
                     num.sum(a.ms_regression), num.stat(a.f), num.stat(a.p_value) + "^a"});
  an.rows.push_back({"", "Residual", num.sum(a.ss_residual), std::to_string(a.df_residual),
                     num.sum(a.ms_residual), "", ""});
  an.rows.push_back({"", "Total", num.sum(a.ss_total), std::to_string(a.df_total), "", "", ""});
  an.footnotes = {predictors_note, dependent_note};

  auto& co = out.coefficients;
  co.title = "Coefficients^a";
  co.column_headers.push_back({{"Model", 2},
                               {"Unstandardized Coefficients", 2},
                               {"Standardized Coefficients", 1},
                               {"t", 1},
                               {"Sig.", 1}});
  co.column_headers.push_back({{"", 2}, {"B", 1}, {"Std. Error", 1}, {"Beta", 1}, {"", 1}, {"", 1}});
  for (std::size_t i = 0; i < model.coefficients.size(); ++i) {
    const auto& c = model.coefficients[i];
    co.rows.push_back({i == 0 ? "1" : "", i == 0 ? c.name : options.label(c.name), num.stat(c.b),
                       num.stat(c.std_error), c.beta ? num.stat(*c.beta) : "", num.stat(c.t), num.stat(c.p)});
  }
  co.footnotes = {{"a", "Dependent Variable: " + options.label(model.dependent)}};
  return out;
}

std::string to_text(const ReportTable& table) {
  table.validate();
  const std::size_t width = table.leaf_columns();
  std::vector<std::size_t> w(width, 0);
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < width; ++c) w[c] = std::max(w[c], row[c].size());
  }
  // Widen the last leaf under any header cell that does not fit.
  for (const auto& tier : table.column_headers) {
    std::size_t col = 0;
    for (const auto& h : tier) {
      const auto span = static_cast<std::size_t>(h.span);
      std::size_t avail = 3 * (span - 1);
      for (std::size_t c = col; c < col + span; ++c) avail += w[c];
      if (h.text.size() > avail) w[col + span - 1] += h.text.size() - avail;
      col += span;
    }
  }

  std::ostringstream out;
  std::size_t total = 0;
  for (auto x : w) total += x;
  total += 3 * (width - 1);
  const std::string rule(total, '-');

  out << table.title << '\n' << rule << '\n';
  for (const auto& tier : table.column_headers) {
    std::size_t col = 0;
    std::string line;
    for (const auto& h : tier) {
      const auto span = static_cast<std::size_t>(h.span);
      std::size_t cw = 3 * (span - 1);
      for (std::size_t c = col; c < col + span; ++c) cw += w[c];
      if (col > 0) line += " | ";
      line += h.text + std::string(cw - h.text.size(), ' ');
      col += span;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << rule << '\n';
  for (const auto& row : table.rows) {
    std::string line;
    for (std::size_t c = 0; c < width; ++c) {
      if (c > 0) line += " | ";
      const auto pad = std::string(w[c] - row[c].size(), ' ');
      line += looks_numeric(row[c]) ? pad + row[c] : row[c] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << rule << '\n';
  for (const auto& f : table.footnotes) {
    out << f.marker << (f.marker == "**" ? " " : ". ") << f.text << '\n';
  }
  return out.str();
}

}  // namespace econreg::report
