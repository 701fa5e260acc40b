#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "econreg/dataset.hpp"

namespace econreg {

inline constexpr const char* kConstantName = "(Constant)";

struct Coefficient {
  std::string name;
  double b = 0.0;
  double std_error = 0.0;
  /// Standardized slope; absent for the constant.
  std::optional<double> beta;
  double t = 0.0;
  double p = 1.0;
};

struct ModelSummary {
  double r = 0.0;
  double r_square = 0.0;
  double adj_r_square = 0.0;
  double std_error_estimate = 0.0;
};

struct AnovaBlock {
  double ss_regression = 0.0;
  double ss_residual = 0.0;
  double ss_total = 0.0;
  int df_regression = 0;
  int df_residual = 0;
  int df_total = 0;
  double ms_regression = 0.0;
  double ms_residual = 0.0;
  double f = 0.0;
  double p_value = 1.0;
};

struct RegressionModel {
  std::string dependent;
  std::vector<std::string> predictors;
  std::size_t n = 0;
  /// Constant first, then predictors in fit order.
  std::vector<Coefficient> coefficients;
  ModelSummary summary;
  AnovaBlock anova;
  /// Condition estimate of the centered crossproduct matrix.
  double condition_estimate = 1.0;
  std::vector<std::string> warnings;

  const Coefficient& coefficient(const std::string& name) const;
};

/// Crossproduct condition estimates above this produce a warning.
inline constexpr double kConditionWarning = 1e10;

/// OLS with intercept via Householder QR of the mean-centered predictors.
RegressionModel fit(const Dataset& ds, const std::string& dependent,
                    const std::vector<std::string>& predictors);

double predict(const RegressionModel& model, const std::map<std::string, double>& inputs);

/// y − ŷ per row, named "<dependent>.residual".
Series residuals(const RegressionModel& model, const Dataset& ds);

/// Fitted values ŷ per row.
Series fitted_values(const RegressionModel& model, const Dataset& ds);

/// "DEP = b0 + b1 * X1 - b2 * X2" on the first line and the slope standard
/// errors "(se1) (se2)" on the second. `spss_style` drops the leading zero
/// of |v| < 1.
std::string equation_string(const RegressionModel& model, int decimals = 3, bool spss_style = true);

}  // namespace econreg
