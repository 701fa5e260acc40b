#include "econreg/ols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "econreg/descriptive.hpp"
#include "econreg/error.hpp"
#include "econreg/format.hpp"
#include "econreg/inference.hpp"

namespace econreg {

namespace {

using Column = std::vector<double>;

// Columns whose diagonal in R falls below this fraction of the column norm
// are treated as linear combinations of the earlier ones.
constexpr double kRankTolerance = 1e-10;

double norm2(const Column& v, std::size_t from = 0) {
  double scale = 0.0;
  for (std::size_t i = from; i < v.size(); ++i) scale = std::max(scale, std::fabs(v[i]));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = from; i < v.size(); ++i) {
    const double t = v[i] / scale;
    s += t * t;
  }
  return scale * std::sqrt(s);
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

// Householder QR of an n x p column set. `cols` is overwritten with R in its
// upper triangle; the same reflections are applied to `rhs`.
struct Householder {
  std::vector<Column> r;  // r[j][i] = R(i, j) for i <= j
  Column qt_rhs;
  std::size_t deficient_column = std::numeric_limits<std::size_t>::max();
};

Householder householder_qr(std::vector<Column> cols, Column rhs, const std::vector<double>& col_norms) {
  const std::size_t n = rhs.size();
  const std::size_t p = cols.size();
  Householder out;
  for (std::size_t k = 0; k < p; ++k) {
    Column& a = cols[k];
    const double alpha_norm = norm2(a, k);
    if (alpha_norm <= kRankTolerance * col_norms[k]) {
      out.deficient_column = k;
      break;
    }
    const double alpha = a[k] > 0.0 ? -alpha_norm : alpha_norm;
    Column v(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
    v[0] -= alpha;
    const double vnorm = norm2(v);
    for (double& x : v) x /= vnorm;

    auto reflect = [&](Column& c) {
      double dot = 0.0;
      for (std::size_t i = k; i < n; ++i) dot += v[i - k] * c[i];
      for (std::size_t i = k; i < n; ++i) c[i] -= 2.0 * dot * v[i - k];
    };
    a[k] = alpha;
    for (std::size_t i = k + 1; i < n; ++i) a[i] = 0.0;
    for (std::size_t j = k + 1; j < p; ++j) reflect(cols[j]);
    reflect(rhs);
  }
  out.r = std::move(cols);
  out.qt_rhs = std::move(rhs);
  return out;
}

// Inverse of the leading k x k block of upper-triangular R.
std::vector<Column> upper_inverse(const std::vector<Column>& r, std::size_t k) {
  // inv[j][i] = Rinv(i, j)
  std::vector<Column> inv(k, Column(k, 0.0));
  for (std::size_t j = 0; j < k; ++j) {
    inv[j][j] = 1.0 / r[j][j];
    for (std::size_t ii = j; ii-- > 0;) {
      double s = 0.0;
      for (std::size_t m = ii + 1; m <= j; ++m) s += r[m][ii] * inv[j][m];
      inv[j][ii] = -s / r[ii][ii];
    }
  }
  return inv;
}

double one_norm_upper(const std::vector<Column>& m, std::size_t k) {
  double best = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i <= j; ++i) s += std::fabs(m[j][i]);
    best = std::max(best, s);
  }
  return best;
}

bool is_constant(const Series& s) {
  const auto m = moments(s);
  double scale = 0.0;
  for (double v : s.values()) scale = std::max(scale, std::fabs(v));
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * scale;
  return m.sum_sq_dev <= static_cast<double>(m.n) * floor * floor;
}

}  // namespace

const Coefficient& RegressionModel::coefficient(const std::string& name) const {
  for (const auto& c : coefficients) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::UnknownVariable, "model has no coefficient '" + name + "'");
}

RegressionModel fit(const Dataset& ds, const std::string& dependent,
                    const std::vector<std::string>& predictors) {
  if (predictors.empty()) throw Error(ErrorKind::InvalidArgument, "at least one predictor required");
  const Series& y = ds.column(dependent);
  std::vector<const Series*> xs;
  std::set<std::string> seen;
  for (const auto& name : predictors) {
    if (name == dependent) {
      throw Error(ErrorKind::InvalidArgument, "'" + name + "' is both dependent and predictor");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::RankDeficient, "predictor '" + name + "' listed twice: {" + name + ", " + name + "}");
    }
    xs.push_back(&ds.column(name));
  }

  const std::size_t n = ds.n();
  const std::size_t p = predictors.size();
  if (n < p + 2) {
    throw Error(ErrorKind::TooFewObservations, std::to_string(p) + " predictors need n >= " +
                                                   std::to_string(p + 2) + ", have " + std::to_string(n));
  }
  for (const auto* x : xs) {
    if (is_constant(*x)) throw Error(ErrorKind::ConstantPredictor, "'" + x->name() + "' is constant");
  }
  const auto my = moments(y);
  if (my.sum_sq_dev == 0.0) throw Error(ErrorKind::ZeroVariance, "dependent '" + dependent + "' is constant");

  std::vector<MomentSummary> mx;
  std::vector<Column> centered;
  std::vector<double> col_norms;
  for (const auto* x : xs) {
    mx.push_back(moments(*x));
    Column c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = x->values()[i] - mx.back().mean;
    col_norms.push_back(norm2(c));
    centered.push_back(std::move(c));
  }
  Column yc(n);
  for (std::size_t i = 0; i < n; ++i) yc[i] = y.values()[i] - my.mean;

  auto qr = householder_qr(centered, yc, col_norms);
  if (qr.deficient_column < p) {
    const std::size_t k = qr.deficient_column;
    // Express column k through the earlier ones to name the dependent set.
    auto inv = upper_inverse(qr.r, k);
    std::vector<std::string> involved;
    for (std::size_t i = 0; i < k; ++i) {
      double c = 0.0;
      for (std::size_t m = i; m < k; ++m) c += inv[m][i] * qr.r[k][m];
      if (std::fabs(c) * col_norms[i] > 1e-8 * col_norms[k]) involved.push_back(predictors[i]);
    }
    involved.push_back(predictors[k]);
    throw Error(ErrorKind::RankDeficient,
                "design matrix is rank deficient; linearly dependent columns: {" + join(involved) + "}");
  }

  const auto rinv = upper_inverse(qr.r, p);
  Column slopes(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    double s = 0.0;
    for (std::size_t j = i; j < p; ++j) s += rinv[j][i] * qr.qt_rhs[j];
    slopes[i] = s;
  }

  RegressionModel model;
  model.dependent = dependent;
  model.predictors = predictors;
  model.n = n;

  double ss_residual = 0.0;
  double ss_regression = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double fitted = 0.0;
    for (std::size_t j = 0; j < p; ++j) fitted += slopes[j] * centered[j][i];
    const double e = yc[i] - fitted;
    ss_residual += e * e;
    ss_regression += fitted * fitted;
  }

  auto& a = model.anova;
  a.ss_total = my.sum_sq_dev;
  a.ss_residual = ss_residual;
  a.ss_regression = ss_regression;
  a.df_regression = static_cast<int>(p);
  a.df_residual = static_cast<int>(n - p - 1);
  a.df_total = static_cast<int>(n - 1);
  a.ms_regression = ss_regression / a.df_regression;
  a.ms_residual = ss_residual / a.df_residual;
  if (a.ms_residual > 0.0) {
    a.f = a.ms_regression / a.ms_residual;
    a.p_value = inference::f_upper_tail(a.f, a.df_regression, a.df_residual);
  } else {
    a.f = std::numeric_limits<double>::infinity();
    a.p_value = 0.0;
  }

  auto& s = model.summary;
  s.r_square = std::clamp(ss_regression / a.ss_total, 0.0, 1.0);
  s.r = std::sqrt(s.r_square);
  s.adj_r_square = 1.0 - (1.0 - s.r_square) * static_cast<double>(n - 1) / static_cast<double>(a.df_residual);
  s.std_error_estimate = std::sqrt(a.ms_residual);

  auto with_test = [&](Coefficient c) {
    if (c.std_error > 0.0) {
      c.t = c.b / c.std_error;
      c.p = inference::t_two_tailed(c.t, a.df_residual);
    } else if (c.b == 0.0) {
      c.t = 0.0;
      c.p = 1.0;
    } else {
      c.t = std::copysign(std::numeric_limits<double>::infinity(), c.b);
      c.p = 0.0;
    }
    return c;
  };

  // Var(b) = σ² (XcᵀXc)⁻¹ = σ² R⁻¹R⁻ᵀ; Var(b0) = σ² (1/n + x̄ᵀ(XcᵀXc)⁻¹x̄).
  double intercept = my.mean;
  double w_norm_sq = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    intercept -= slopes[j] * mx[j].mean;
    double w = 0.0;
    for (std::size_t i = 0; i <= j; ++i) w += rinv[j][i] * mx[i].mean;
    w_norm_sq += w * w;
  }
  Coefficient constant;
  constant.name = kConstantName;
  constant.b = intercept;
  constant.std_error = std::sqrt(a.ms_residual * (1.0 / static_cast<double>(n) + w_norm_sq));
  model.coefficients.push_back(with_test(constant));

  const double sd_y = my.sd();
  for (std::size_t j = 0; j < p; ++j) {
    double diag = 0.0;
    for (std::size_t k = j; k < p; ++k) diag += rinv[k][j] * rinv[k][j];
    Coefficient c;
    c.name = predictors[j];
    c.b = slopes[j];
    c.std_error = std::sqrt(a.ms_residual * diag);
    c.beta = slopes[j] * mx[j].sd() / sd_y;
    model.coefficients.push_back(with_test(c));
  }

  const double kappa = one_norm_upper(qr.r, p) * one_norm_upper(rinv, p);
  model.condition_estimate = kappa * kappa;
  if (model.condition_estimate > kConditionWarning) {
    model.warnings.push_back("crossproduct condition estimate " + fmt::significant(model.condition_estimate, 3, false) +
                             " exceeds 1e10; coefficients may be unstable");
  }
  return model;
}

double predict(const RegressionModel& model, const std::map<std::string, double>& inputs) {
  if (model.coefficients.size() != model.predictors.size() + 1) {
    throw Error(ErrorKind::InvalidArgument, "model coefficient count does not match its predictors");
  }
  double y = model.coefficients.front().b;
  for (std::size_t j = 0; j < model.predictors.size(); ++j) {
    auto it = inputs.find(model.predictors[j]);
    if (it == inputs.end()) {
      throw Error(ErrorKind::MissingPredictor, "no value supplied for '" + model.predictors[j] + "'");
    }
    y += model.coefficients[j + 1].b * it->second;
  }
  return y;
}

namespace {

std::vector<double> fitted_raw(const RegressionModel& model, const Dataset& ds) {
  if (ds.n() != model.n) {
    throw Error(ErrorKind::DatasetMismatch, "model fitted on n=" + std::to_string(model.n) +
                                                ", dataset has n=" + std::to_string(ds.n()));
  }
  std::vector<const Series*> xs;
  for (const auto& name : model.predictors) {
    if (!ds.contains(name)) throw Error(ErrorKind::DatasetMismatch, "dataset lacks predictor '" + name + "'");
    xs.push_back(&ds.column(name));
  }
  std::vector<double> out(ds.n(), model.coefficients.front().b);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double b = model.coefficients[j + 1].b;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b * xs[j]->values()[i];
  }
  return out;
}

}  // namespace

Series fitted_values(const RegressionModel& model, const Dataset& ds) {
  return Series(model.dependent + ".fitted", ds.years(), fitted_raw(model, ds));
}

Series residuals(const RegressionModel& model, const Dataset& ds) {
  if (!ds.contains(model.dependent)) {
    throw Error(ErrorKind::DatasetMismatch, "dataset lacks dependent '" + model.dependent + "'");
  }
  auto e = fitted_raw(model, ds);
  const auto& y = ds.column(model.dependent).values();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = y[i] - e[i];
  return Series(model.dependent + ".residual", ds.years(), std::move(e));
}

std::string equation_string(const RegressionModel& model, int decimals, bool spss_style) {
  std::string eq = model.dependent + " = ";
  std::string se_line;
  for (std::size_t i = 0; i < model.coefficients.size(); ++i) {
    const auto& c = model.coefficients[i];
    if (i == 0) {
      eq += fmt::fixed(c.b, decimals, spss_style);
      continue;
    }
    const auto magnitude = fmt::fixed(std::fabs(c.b), decimals, spss_style);
    const bool negative = c.b < 0.0 && !fmt::is_rounded_zero(magnitude);
    eq += (negative ? " - " : " + ") + magnitude + " * " + c.name;
    if (!se_line.empty()) se_line += ' ';
    se_line += "(" + fmt::fixed(c.std_error, decimals, spss_style) + ")";
  }
  return eq + "\n" + se_line;
}

}  // namespace econreg
