#include "econreg/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "econreg/error.hpp"
#include "econreg/inference.hpp"

namespace econreg {

namespace {

double mean_of(std::span<const double> x) {
  // Incremental mean, no large running sum.
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m += (x[i] - m) / static_cast<double>(i + 1);
  return m;
}

void require_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()) + " observations");
  }
  if (x.empty()) throw Error(ErrorKind::TooFewObservations, "no observations");
}

}  // namespace

double MomentSummary::variance() const {
  if (n < 2) {
    throw Error(ErrorKind::TooFewObservations, "sample variance needs n >= 2, have " + std::to_string(n));
  }
  return sum_sq_dev / static_cast<double>(n - 1);
}

double MomentSummary::sd() const { return std::sqrt(variance()); }

MomentSummary moments(std::span<const double> x) {
  if (x.empty()) throw Error(ErrorKind::TooFewObservations, "moments of an empty series");
  MomentSummary m;
  for (double v : x) {
    ++m.n;
    const double delta = v - m.mean;
    m.mean += delta / static_cast<double>(m.n);
    m.sum_sq_dev += delta * (v - m.mean);
  }
  m.sum_sq_dev = std::max(m.sum_sq_dev, 0.0);
  return m;
}

double sscp(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y);
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
  return s;
}

double correlation_p_value(double r, std::size_t n) {
  if (n < 3) throw Error(ErrorKind::TooFewObservations, "correlation test needs n >= 3");
  const double abs_r = std::fabs(r);
  if (abs_r >= 1.0) return 0.0;
  const auto df = static_cast<int>(n - 2);
  const double t = r * std::sqrt(static_cast<double>(df)) / std::sqrt((1.0 - r) * (1.0 + r));
  return inference::t_two_tailed(t, df);
}

CorrelationCell pearson(const Series& x, const Series& y) {
  require_pair(x.view(), y.view());
  const std::size_t n = x.size();
  if (n < 3) {
    throw Error(ErrorKind::TooFewObservations,
                "pearson(" + x.name() + ", " + y.name() + ") needs n >= 3, have " + std::to_string(n));
  }
  const auto mx = moments(x);
  const auto my = moments(y);
  if (mx.sum_sq_dev == 0.0) throw Error(ErrorKind::ZeroVariance, "'" + x.name() + "' is constant");
  if (my.sum_sq_dev == 0.0) throw Error(ErrorKind::ZeroVariance, "'" + y.name() + "' is constant");

  CorrelationCell cell;
  cell.n = n;
  cell.sscp = sscp(x, y);
  cell.covariance = cell.sscp / static_cast<double>(n - 1);
  cell.r = std::clamp(cell.sscp / std::sqrt(mx.sum_sq_dev * my.sum_sq_dev), -1.0, 1.0);
  cell.p_two_tailed = correlation_p_value(cell.r, n);
  cell.significant_01 = cell.p_two_tailed < 0.01;
  return cell;
}

const CorrelationCell& CorrelationMatrix::at(const std::string& a, const std::string& b) const {
  auto index = [&](const std::string& name) {
    auto it = std::find(variable_names.begin(), variable_names.end(), name);
    if (it == variable_names.end()) {
      throw Error(ErrorKind::UnknownVariable, "'" + name + "' not in correlation matrix");
    }
    return static_cast<std::size_t>(it - variable_names.begin());
  };
  return at(index(a), index(b));
}

CorrelationMatrix correlation_matrix(const Dataset& ds, const std::vector<std::string>& names) {
  if (names.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "correlation matrix needs at least 2 variables");
  }
  std::vector<const Series*> cols;
  cols.reserve(names.size());
  for (const auto& name : names) cols.push_back(&ds.column(name));

  const std::size_t k = names.size();
  CorrelationMatrix m;
  m.variable_names = names;
  m.cells.assign(k, std::vector<CorrelationCell>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& xi = *cols[i];
    if (xi.size() < 3) {
      throw Error(ErrorKind::TooFewObservations,
                  "correlation matrix needs n >= 3, have " + std::to_string(xi.size()));
    }
    const auto mi = moments(xi);
    if (mi.sum_sq_dev == 0.0) throw Error(ErrorKind::ZeroVariance, "'" + xi.name() + "' is constant");
    auto& diag = m.cells[i][i];
    diag.r = 1.0;
    diag.p_two_tailed = 0.0;
    diag.sscp = mi.sum_sq_dev;
    diag.covariance = mi.sum_sq_dev / static_cast<double>(mi.n - 1);
    diag.n = mi.n;
    diag.significant_01 = true;
    for (std::size_t j = i + 1; j < k; ++j) {
      try {
        m.cells[i][j] = pearson(xi, *cols[j]);
      } catch (const Error& e) {
        throw e.with_context("pair (" + names[i] + ", " + names[j] + ")");
      }
      m.cells[j][i] = m.cells[i][j];
    }
  }
  return m;
}

}  // namespace econreg
