#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace econreg {

/// A named, year-indexed annual variable. Years strictly increase and every
/// value is finite; the constructor enforces both.
class Series {
 public:
  Series(std::string name, std::vector<int> years, std::vector<double> values);

  const std::string& name() const noexcept { return name_; }
  const std::vector<int>& years() const noexcept { return years_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::span<const double> view() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Same data under another name.
  Series renamed(std::string name) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::string name_;
  std::vector<int> years_;
  std::vector<double> values_;
};

/// Series sharing one year vector, in a fixed variable order.
class Dataset {
 public:
  explicit Dataset(std::vector<Series> variables);

  std::size_t n() const noexcept { return years_.size(); }
  const std::vector<int>& years() const noexcept { return years_; }
  const std::vector<Series>& variables() const noexcept { return variables_; }
  std::vector<std::string> names() const;
  bool contains(std::string_view name) const noexcept;

  /// Case-sensitive lookup; throws UnknownVariable listing what exists.
  const Series& column(std::string_view name) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Series> variables_;
  std::vector<int> years_;
};

struct CsvOptions {
  /// Strip ',' inside quoted numeric cells ("1,234.5").
  bool strip_thousands_separators = true;
};

struct LoadResult {
  Dataset dataset;
  /// 1-based data-row numbers (header excluded) removed by listwise deletion.
  std::vector<std::size_t> dropped_rows;
  std::size_t raw_rows = 0;
};

LoadResult parse_csv(std::string_view text, const CsvOptions& options = {});
LoadResult load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// Restrict every series to the years present in all of them.
Dataset align(const std::vector<Series>& series_list);

inline const Series& column(const Dataset& ds, std::string_view name) { return ds.column(name); }

}  // namespace econreg
