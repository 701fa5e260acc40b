#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "econreg/dataset.hpp"

namespace econreg {

struct MomentSummary {
  std::size_t n = 0;
  double mean = 0.0;
  /// Σ(x − x̄)².
  double sum_sq_dev = 0.0;

  /// Sample standard deviation (divisor n − 1). Throws TooFewObservations for n < 2.
  double sd() const;
  double variance() const;
};

struct CorrelationCell {
  double r = 0.0;
  double p_two_tailed = 1.0;
  double sscp = 0.0;
  double covariance = 0.0;
  std::size_t n = 0;
  bool significant_01 = false;

  friend bool operator==(const CorrelationCell&, const CorrelationCell&) = default;
};

struct CorrelationMatrix {
  std::vector<std::string> variable_names;
  /// Row-major, size() x size().
  std::vector<std::vector<CorrelationCell>> cells;

  std::size_t size() const noexcept { return variable_names.size(); }
  const CorrelationCell& at(std::size_t i, std::size_t j) const { return cells.at(i).at(j); }
  const CorrelationCell& at(const std::string& a, const std::string& b) const;
};

/// Welford update: incremental mean and running squared deviation.
MomentSummary moments(std::span<const double> x);
inline MomentSummary moments(const Series& x) { return moments(x.view()); }

/// Σ(xᵢ − x̄)(yᵢ − ȳ), two-pass.
double sscp(std::span<const double> x, std::span<const double> y);
inline double sscp(const Series& x, const Series& y) { return sscp(x.view(), y.view()); }

/// Pearson r with its two-tailed t-test p (df = n − 2). Needs n ≥ 3 and
/// nonzero variance in both inputs.
CorrelationCell pearson(const Series& x, const Series& y);

/// Two-tailed p of a sample correlation r over n observations.
double correlation_p_value(double r, std::size_t n);

CorrelationMatrix correlation_matrix(const Dataset& ds, const std::vector<std::string>& names);

}  // namespace econreg
