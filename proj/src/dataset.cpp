#include "econreg/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "econreg/error.hpp"

namespace econreg {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

// One CSV record split on ',' with double-quote escaping. Quotes are
// removed from the returned cells.
std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) {
    throw Error(ErrorKind::MalformedRow,
                "unterminated quote on line " + std::to_string(line_no));
  }
  cells.push_back(std::move(cur));
  return cells;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Series::Series(std::string name, std::vector<int> years, std::vector<double> values)
    : name_(std::move(name)), years_(std::move(years)), values_(std::move(values)) {
  if (name_.empty()) throw Error(ErrorKind::InvalidSeries, "series name is empty");
  if (years_.size() != values_.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "series '" + name_ + "' has " + std::to_string(years_.size()) +
                    " years but " + std::to_string(values_.size()) + " values");
  }
  if (years_.empty()) throw Error(ErrorKind::InvalidSeries, "series '" + name_ + "' is empty");
  for (std::size_t i = 1; i < years_.size(); ++i) {
    if (years_[i] <= years_[i - 1]) {
      throw Error(ErrorKind::InvalidSeries,
                  "series '" + name_ + "': years not strictly increasing at " +
                      std::to_string(years_[i]));
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorKind::InvalidSeries, "series '" + name_ + "': non-finite value for year " +
                                                std::to_string(years_[i]));
    }
  }
}

Series Series::renamed(std::string name) const { return Series(std::move(name), years_, values_); }

Dataset::Dataset(std::vector<Series> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw Error(ErrorKind::InvalidArgument, "dataset needs at least one variable");
  years_ = variables_.front().years();
  std::set<std::string_view> seen;
  for (const auto& s : variables_) {
    if (!seen.insert(s.name()).second) {
      throw Error(ErrorKind::DuplicateName, "variable '" + s.name() + "' appears twice");
    }
    if (s.years() != years_) {
      throw Error(ErrorKind::DatasetMismatch,
                  "variable '" + s.name() + "' does not share the dataset's year vector");
    }
  }
}

std::vector<std::string> Dataset::names() const {
  std::vector<std::string> out;
  out.reserve(variables_.size());
  for (const auto& s : variables_) out.push_back(s.name());
  return out;
}

bool Dataset::contains(std::string_view name) const noexcept {
  return std::any_of(variables_.begin(), variables_.end(),
                     [&](const Series& s) { return s.name() == name; });
}

const Series& Dataset::column(std::string_view name) const {
  for (const auto& s : variables_) {
    if (s.name() == name) return s;
  }
  throw Error(ErrorKind::UnknownVariable,
              "'" + std::string(name) + "' not found; available: " + join(names()));
}

LoadResult parse_csv(std::string_view text, const CsvOptions& options) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      auto line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.push_back(line);
      start = end + 1;
    }
  }
  // Blank lines carry no record.
  std::vector<std::pair<std::size_t, std::string_view>> records;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) records.emplace_back(i + 1, lines[i]);
  }
  if (records.empty()) throw Error(ErrorKind::MalformedHeader, "no header row");

  const auto header = split_record(records.front().second, records.front().first);
  if (header.size() < 2) {
    throw Error(ErrorKind::MalformedHeader, "need YEAR plus at least one variable column");
  }
  if (!iequals(trim(header.front()), "YEAR")) {
    throw Error(ErrorKind::MalformedHeader,
                "first column must be YEAR, found '" + std::string(trim(header.front())) + "'");
  }
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t c = 1; c < header.size(); ++c) {
    std::string name(trim(header[c]));
    if (name.empty()) {
      throw Error(ErrorKind::MalformedHeader, "column " + std::to_string(c + 1) + " has no name");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::MalformedHeader, "duplicate column name '" + name + "'");
    }
    names.push_back(std::move(name));
  }

  const std::size_t width = names.size();
  std::vector<int> years;
  std::vector<std::vector<double>> columns(width);
  std::vector<std::size_t> dropped;
  std::size_t raw_rows = 0;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto [line_no, line] = records[r];
    const std::size_t data_row = r;
    ++raw_rows;
    auto cells = split_record(line, line_no);
    if (cells.size() > width + 1) {
      throw Error(ErrorKind::MalformedRow, "row " + std::to_string(data_row) + " has " +
                                               std::to_string(cells.size()) + " cells, header has " +
                                               std::to_string(width + 1));
    }
    cells.resize(width + 1);

    auto year_text = trim(cells[0]);
    int year = 0;
    if (year_text.empty()) {
      dropped.push_back(data_row);
      continue;
    }
    if (!parse_number(year_text, year)) {
      throw Error(ErrorKind::NonNumericCell, "row " + std::to_string(data_row) +
                                                 ", column YEAR: '" + std::string(year_text) + "'");
    }

    std::vector<double> row(width);
    bool missing = false;
    for (std::size_t c = 0; c < width; ++c) {
      std::string cell(trim(cells[c + 1]));
      if (options.strip_thousands_separators) std::erase(cell, ',');
      if (cell.empty()) {
        missing = true;
        continue;
      }
      double v = 0.0;
      if (!parse_number(std::string_view(cell), v) || !std::isfinite(v)) {
        throw Error(ErrorKind::NonNumericCell, "row " + std::to_string(data_row) + ", column " +
                                                   names[c] + ": '" + cells[c + 1] + "'");
      }
      row[c] = v;
    }
    if (missing) {
      dropped.push_back(data_row);
      continue;
    }
    years.push_back(year);
    for (std::size_t c = 0; c < width; ++c) columns[c].push_back(row[c]);
  }

  if (years.empty()) {
    throw Error(ErrorKind::EmptyAfterDeletion,
                std::to_string(raw_rows) + " data rows, none fully populated");
  }
  std::vector<Series> series;
  series.reserve(width);
  for (std::size_t c = 0; c < width; ++c) {
    series.emplace_back(names[c], years, std::move(columns[c]));
  }
  return LoadResult{Dataset(std::move(series)), std::move(dropped), raw_rows};
}

LoadResult load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::UnreadableFile, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::UnreadableFile, "read failed for '" + path.string() + "'");
  return parse_csv(buf.str(), options);
}

Dataset align(const std::vector<Series>& series_list) {
  if (series_list.empty()) throw Error(ErrorKind::InvalidArgument, "align needs at least one series");
  std::set<std::string_view> seen;
  for (const auto& s : series_list) {
    if (!seen.insert(s.name()).second) {
      throw Error(ErrorKind::DuplicateName, "series '" + s.name() + "' given twice");
    }
  }

  std::vector<int> common = series_list.front().years();
  for (std::size_t i = 1; i < series_list.size(); ++i) {
    std::vector<int> next;
    const auto& ys = series_list[i].years();
    std::set_intersection(common.begin(), common.end(), ys.begin(), ys.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  if (common.empty()) throw Error(ErrorKind::EmptyIntersection, "series share no common year");

  std::vector<Series> out;
  out.reserve(series_list.size());
  for (const auto& s : series_list) {
    std::vector<double> values;
    values.reserve(common.size());
    const auto& ys = s.years();
    std::size_t j = 0;
    for (int y : common) {
      while (ys[j] != y) ++j;
      values.push_back(s.values()[j]);
    }
    out.emplace_back(s.name(), common, std::move(values));
  }
  return Dataset(std::move(out));
}

}  // namespace econreg
