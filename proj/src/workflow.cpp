#include "econreg/workflow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "econreg/error.hpp"
#include "econreg/format.hpp"

namespace econreg::workflow {

namespace {

constexpr double kTieTolerance = 1e-12;

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; }

template <typename F>
auto in_stage(StageId id, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw e.with_context("stage " + std::string(to_string(id)));
  }
}

StageArtifact model_stage(StageId id, const Dataset& ds, const std::string& dependent,
                          std::vector<std::string> predictors, std::string rule) {
  return in_stage(id, [&] {
    StageArtifact art;
    art.plan.stage_id = id;
    art.plan.inputs = predictors;
    art.plan.inputs.insert(art.plan.inputs.begin(), dependent);
    art.plan.selection_rule = std::move(rule);
    art.plan.outputs = {"model " + dependent};
    art.model = fit(ds, dependent, predictors);
    const auto eq = equation_string(*art.model, 3, true);
    art.decisions.push_back("fit " + eq.substr(0, eq.find('\n')));
    for (const auto& w : art.model->warnings) art.decisions.push_back("warning: " + w);
    return art;
  });
}

}  // namespace

std::string_view to_string(StageId id) noexcept {
  switch (id) {
    case StageId::IndexScreen: return "IndexScreen";
    case StageId::PriceLink: return "PriceLink";
    case StageId::RateModel: return "RateModel";
    case StageId::GpdiModel: return "GpdiModel";
  }
  return "Stage";
}

std::vector<StageArtifact> run_staged_analysis(const Dataset& ds, const VariableConfig& config) {
  std::vector<StageArtifact> stages;

  // Stage 1: strongest correlated pair of indices.
  stages.push_back(in_stage(StageId::IndexScreen, [&] {
    if (config.indices.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two index variables");
    StageArtifact art;
    art.plan = {StageId::IndexScreen, config.indices, "pair of indices with the largest |r|", {"correlation matrix"}};
    art.matrix = correlation_matrix(ds, config.indices);
    const auto& m = *art.matrix;
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const double r = m.at(i, j).r;
        art.decisions.push_back("r" + pair_name(m.variable_names[i], m.variable_names[j]) + " = " +
                                fmt::fixed(r, 6, false));
        const double mag = std::fabs(r);
        if (best >= 0.0 && std::fabs(mag - best) <= kTieTolerance) {
          art.decisions.push_back("tie: |r| of " + pair_name(m.variable_names[i], m.variable_names[j]) +
                                  " equals " + pair_name(m.variable_names[bi], m.variable_names[bj]) +
                                  "; keeping " + pair_name(m.variable_names[bi], m.variable_names[bj]) +
                                  " by configured order");
        } else if (mag > best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    }
    art.selected = {m.variable_names[bi], m.variable_names[bj]};
    art.decisions.push_back("selected " + pair_name(art.selected[0], art.selected[1]) + " with r = " +
                            fmt::fixed(m.at(bi, bj).r, 6, false));
    return art;
  }));

  // Stage 2: index most correlated with the price level, then price ~ index.
  const auto pair = stages.back().selected;
  std::string index;
  stages.push_back(in_stage(StageId::PriceLink, [&] {
    std::vector<std::string> names = pair;
    names.push_back(config.price);
    auto matrix = correlation_matrix(ds, names);
    std::vector<std::string> decisions;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < pair.size(); ++i) {
      const double r = matrix.at(i, pair.size()).r;
      decisions.push_back("r" + pair_name(pair[i], config.price) + " = " + fmt::fixed(r, 6, false));
    }
    const double r0 = std::fabs(matrix.at(0, 2).r);
    const double r1 = std::fabs(matrix.at(1, 2).r);
    if (std::fabs(r0 - r1) <= kTieTolerance) {
      decisions.push_back("tie: |r| equal for " + pair[0] + " and " + pair[1] + "; keeping " + pair[0] +
                          " by configured order");
    } else if (r1 > r0) {
      pick = 1;
    }
    index = pair[pick];
    decisions.push_back("selected " + index);

    auto art = model_stage(StageId::PriceLink, ds, config.price, {index},
                           "index with the largest |r| against " + config.price + "; simple regression");
    art.plan.inputs = names;
    art.plan.outputs = {"correlation matrix", "model " + config.price};
    art.matrix = std::move(matrix);
    art.selected = {index};
    decisions.insert(decisions.end(), art.decisions.begin(), art.decisions.end());
    art.decisions = std::move(decisions);
    return art;
  }));

  stages.push_back(model_stage(StageId::RateModel, ds, config.rate, {index, config.price},
                               config.rate + " on the selected index and " + config.price));
  stages.push_back(model_stage(StageId::GpdiModel, ds, config.investment, {index, config.price, config.rate},
                               config.investment + " on the selected index, " + config.price + " and " +
                                   config.rate));
  return stages;
}

std::vector<inference::TestVerdict> verdict_report(const RegressionModel& model, double alpha) {
  std::vector<inference::TestVerdict> out;
  out.push_back(inference::verdict(model.anova.f, inference::StatisticKind::F, model.anova.df_regression,
                                   model.anova.df_residual, alpha));
  for (const auto& c : model.coefficients) {
    out.push_back(inference::verdict(c.t, inference::StatisticKind::t, model.anova.df_residual, 0, alpha));
  }
  return out;
}

// ---------------------------------------------------------------------------

double FixtureRecord::rounding() const { return 0.5 * std::pow(10.0, -decimals); }

const FixtureRecord& StatisticsFixture::record(const std::string& id) const {
  for (const auto& r : records) {
    if (r.id == id) return r;
  }
  throw Error(ErrorKind::FixtureError, "no record '" + id + "'");
}

FixtureRecord& StatisticsFixture::mutable_record(const std::string& id) {
  for (auto& r : records) {
    if (r.id == id) return r;
  }
  throw Error(ErrorKind::FixtureError, "no record '" + id + "'");
}

StatisticsFixture parse_fixture(const std::string& json_text) {
  try {
    const auto doc = nlohmann::json::parse(json_text);
    StatisticsFixture f;
    f.version = doc.at("version").get<int>();
    f.labels = doc.value("labels", std::map<std::string, std::string>{});
    for (const auto& m : doc.value("models", nlohmann::json::array())) {
      FixtureModel fm;
      fm.id = m.at("id").get<std::string>();
      fm.dependent = m.at("dependent").get<std::string>();
      fm.predictors = m.at("predictors").get<std::vector<std::string>>();
      fm.tables = m.value("tables", std::vector<std::string>{});
      if (m.contains("dependent_label")) fm.dependent_label = m["dependent_label"].get<std::string>();
      f.models.push_back(std::move(fm));
    }
    for (const auto& r : doc.at("records")) {
      FixtureRecord rec;
      rec.id = r.at("id").get<std::string>();
      rec.table = r.at("table").get<std::string>();
      rec.printed = r.value("printed", "");
      rec.value = r.at("value").get<double>();
      rec.decimals = r.value("decimals", 3);
      rec.note = r.value("note", "");
      f.records.push_back(std::move(rec));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::FixtureError, e.what());
  }
}

StatisticsFixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::UnreadableFile, "cannot open fixture '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

namespace {

struct SuiteBuilder {
  const StatisticsFixture& fx;
  std::vector<ConsistencyCheck> checks;

  double v(const std::string& id) const { return fx.value(id); }
  double rd(const std::string& id) const { return fx.record(id).rounding(); }

  void add(std::string label, std::string kind, std::string table, double expected, double computed,
           double tolerance, std::vector<std::string> inputs) {
    ConsistencyCheck c{std::move(label), std::move(kind), std::move(table), expected, computed, tolerance,
                       std::fabs(expected - computed) <= tolerance, std::move(inputs)};
    checks.push_back(std::move(c));
  }

  // |a/b| error bound from half-unit rounding of both printed inputs plus the
  // printed result.
  double ratio_bound(const std::string& a, const std::string& b, const std::string& result) const {
    const double q = std::fabs(v(a) / v(b));
    return q * (rd(a) / std::fabs(v(a)) + rd(b) / std::fabs(v(b))) + rd(result);
  }
};

double two_tailed_t(double t, int df) { return inference::t_two_tailed(t, df); }

struct CorrelationFit {
  std::vector<double> beta;
  double r_square = 0.0;
  std::vector<double> t;
};

// Standardized regression of y on xs computed from a correlation matrix.
CorrelationFit fit_from_correlations(const std::vector<std::vector<double>>& rxx, const std::vector<double>& rxy,
                                     double n) {
  const std::size_t p = rxy.size();
  std::vector<std::vector<double>> a(p, std::vector<double>(2 * p, 0.0));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) a[i][j] = rxx[i][j];
    a[i][p + i] = 1.0;
  }
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < p; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    if (a[c][c] == 0.0) throw Error(ErrorKind::RankDeficient, "singular correlation matrix");
    for (std::size_t r = 0; r < p; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < 2 * p; ++j) a[r][j] -= f * a[c][j];
    }
  }
  CorrelationFit out;
  out.beta.assign(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) out.beta[i] += a[i][p + j] / a[i][i] * rxy[j];
  }
  for (std::size_t i = 0; i < p; ++i) out.r_square += out.beta[i] * rxy[i];
  const double s2 = (1.0 - out.r_square) / (n - static_cast<double>(p) - 1.0);
  for (std::size_t i = 0; i < p; ++i) out.t.push_back(out.beta[i] / std::sqrt(s2 * a[i][p + i] / a[i][i]));
  return out;
}

// Total sum of squares record for a variable's own variance.
std::string total_ss_record(const std::string& var) {
  if (var == "SP500" || var == "NYSE" || var == "DJ") return "T1-1.SS." + var;
  if (var == "CPIU") return "M2.SSTOT";
  if (var == "TB3") return "M3.SSTOT";
  if (var == "GPDI") return "M4.SSTOT";
  throw Error(ErrorKind::FixtureError, "no total sum of squares for '" + var + "'");
}

}  // namespace

std::vector<ConsistencyCheck> paper_consistency_suite(const StatisticsFixture& fixture) {
  SuiteBuilder s{fixture, {}};
  const std::string t11 = "Table 1-1";
  const double n = s.v("T1-1.N");

  // Correlations and covariances from the SSCP block.
  const std::vector<std::string> idx{"NYSE", "DJ", "SP500"};
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      const auto key = idx[i] + "." + idx[j];
      const auto sscp_id = "T1-1.SSCP." + key;
      const auto ssa = "T1-1.SS." + idx[i];
      const auto ssb = "T1-1.SS." + idx[j];
      s.add("r(" + idx[i] + "," + idx[j] + ") = SSCP / sqrt(SS x SS)", "correlation", t11, s.v("T1-1.R." + key),
            s.v(sscp_id) / std::sqrt(s.v(ssa) * s.v(ssb)), 0.0005, {sscp_id, ssa, ssb, "T1-1.R." + key});
    }
  }
  for (const auto& var : idx) {
    const auto ss = "T1-1.SS." + var;
    s.add("cov(" + var + "," + var + ") = SS / (N-1)", "covariance", t11, s.v("T1-1.COV." + var),
          s.v(ss) / (n - 1.0), 0.001, {ss, "T1-1.N", "T1-1.COV." + var});
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      const auto key = idx[i] + "." + idx[j];
      s.add("cov(" + idx[i] + "," + idx[j] + ") = SSCP / (N-1)", "covariance", t11, s.v("T1-1.COV." + key),
            s.v("T1-1.SSCP." + key) / (n - 1.0), 0.001, {"T1-1.SSCP." + key, "T1-1.N", "T1-1.COV." + key});
    }
  }

  for (const auto& m : fixture.models) {
    const auto& P = m.id;
    auto id = [&](const std::string& k) { return P + "." + k; };
    const std::string summary_t = m.tables.size() > 0 ? m.tables[0] : P;
    const std::string anova_t = m.tables.size() > 1 ? m.tables[1] : P;
    const std::string coef_t = m.tables.size() > 2 ? m.tables[2] : P;
    const double nobs = s.v(id("DFTOT")) + 1.0;
    const double p = s.v(id("DFREG"));
    const int df_res = static_cast<int>(std::lround(s.v(id("DFRES"))));

    s.add(P + " adjusted R^2 from (R^2, n, p)", "adj-r-square", summary_t, s.v(id("ADJ")),
          1.0 - (1.0 - s.v(id("RSQ"))) * (nobs - 1.0) / (nobs - p - 1.0), 0.001,
          {id("RSQ"), id("DFTOT"), id("DFREG"), id("ADJ")});
    s.add(P + " R^2 = R x R", "r-square", summary_t, s.v(id("RSQ")), s.v(id("R")) * s.v(id("R")), 0.001,
          {id("R"), id("RSQ")});
    s.add(P + " R^2 = SS regression / SS total", "r-square", anova_t, s.v(id("RSQ")),
          s.v(id("SSREG")) / s.v(id("SSTOT")), 0.001, {id("SSREG"), id("SSTOT"), id("RSQ")});
    s.add(P + " SEE = sqrt(MS residual)", "see", summary_t, s.v(id("SEE")), std::sqrt(s.v(id("MSRES"))),
          0.0005 * s.v(id("SEE")), {id("MSRES"), id("SEE")});
    s.add(P + " SS regression + SS residual = SS total", "anova-additivity", anova_t, s.v(id("SSTOT")),
          s.v(id("SSREG")) + s.v(id("SSRES")), s.rd(id("SSREG")) + s.rd(id("SSRES")) + s.rd(id("SSTOT")),
          {id("SSREG"), id("SSRES"), id("SSTOT")});
    s.add(P + " F = MS regression / MS residual", "f-ratio", anova_t, s.v(id("F")),
          s.v(id("MSREG")) / s.v(id("MSRES")), s.ratio_bound(id("MSREG"), id("MSRES"), id("F")),
          {id("MSREG"), id("MSRES"), id("F")});

    const double f_tol = P == "M3" ? 0.001 : 0.005;
    s.add(P + " Sig. of F(" + std::to_string(static_cast<int>(p)) + "," + std::to_string(df_res) + ")",
          "p-value", anova_t, s.v(id("SIG")),
          inference::f_upper_tail(s.v(id("F")), static_cast<int>(p), df_res), f_tol,
          {id("F"), id("DFREG"), id("DFRES"), id("SIG")});

    if (m.predictors.size() == 1) {
      const auto t_id = id(m.predictors[0] + ".T");
      s.add(P + " F = t^2 for the single slope", "f-t-bridge", anova_t, s.v(id("F")), s.v(t_id) * s.v(t_id), 0.02,
            {t_id, id("F")});
    }

    std::vector<std::string> coefs{"CONST"};
    coefs.insert(coefs.end(), m.predictors.begin(), m.predictors.end());
    for (const auto& c : coefs) {
      const auto b = id(c + ".B"), se = id(c + ".SE"), t = id(c + ".T"), sig = id(c + ".SIG");
      s.add(P + " " + c + " t = B / SE", "t-ratio", coef_t, s.v(t), s.v(b) / s.v(se), s.ratio_bound(b, se, t),
            {b, se, t});
      const double tol = (P == "M3" && c == "SP500") ? 0.001 : 0.005;
      s.add(P + " " + c + " Sig. of t(" + std::to_string(df_res) + ")", "p-value", coef_t, s.v(sig),
            two_tailed_t(s.v(t), df_res), tol, {t, id("DFRES"), sig});
    }

    const auto ss_y = total_ss_record(m.dependent);
    for (const auto& c : m.predictors) {
      const auto b = id(c + ".B"), beta = id(c + ".BETA");
      const auto ss_x = total_ss_record(c);
      // Both totals share df = n - 1, which cancels in sd_x / sd_y.
      const double computed = s.v(b) * std::sqrt(s.v(ss_x) / (nobs - 1.0)) / std::sqrt(s.v(ss_y) / (nobs - 1.0));
      s.add(P + " " + c + " Beta = B x sd(" + c + ") / sd(" + m.dependent + ")", "beta", coef_t, s.v(beta), computed,
            0.002, {b, ss_x, ss_y, beta});
    }
  }

  // Degrees of freedom and mean squares.
  for (const auto& m : fixture.models) {
    const auto& P = m.id;
    auto id = [&](const std::string& k) { return P + "." + k; };
    const std::string anova_t = m.tables.size() > 1 ? m.tables[1] : P;
    s.add(P + " df regression = number of predictors", "degrees-of-freedom", anova_t, s.v(id("DFREG")),
          static_cast<double>(m.predictors.size()), 0.0, {id("DFREG")});
    s.add(P + " df total = N - 1", "degrees-of-freedom", anova_t, s.v(id("DFTOT")), n - 1.0, 0.0,
          {"T1-1.N", id("DFTOT")});
    s.add(P + " df regression + df residual = df total", "degrees-of-freedom", anova_t, s.v(id("DFTOT")),
          s.v(id("DFREG")) + s.v(id("DFRES")), 0.0, {id("DFREG"), id("DFRES"), id("DFTOT")});
    for (const std::string part : {"REG", "RES"}) {
      const auto ss = id("SS" + part), df = id("DF" + part), ms = id("MS" + part);
      s.add(P + " MS " + (part == "REG" ? "regression" : "residual") + " = SS / df", "mean-square", anova_t,
            s.v(ms), s.v(ss) / s.v(df), s.rd(ss) / s.v(df) + s.rd(ms), {ss, df, ms});
    }
  }

  // The same correlation printed in two tables.
  const std::vector<std::pair<std::string, std::string>> repeated{
      {"T1-1.R.NYSE.DJ", "APP.R.NYSE.DJ"},     {"T1-1.R.NYSE.SP500", "APP.R.NYSE.SP500"},
      {"T1-1.R.DJ.SP500", "APP.R.DJ.SP500"},   {"T2-1.R.DJ.CPIU", "APP.R.DJ.CPIU"},
      {"T2-2.R.CPIU.SP500", "APP.R.SP500.CPIU"}};
  for (const auto& [a, b] : repeated) {
    s.add(a + " = " + b, "cross-table", fixture.record(a).table + " / Appendix", s.v(a), s.v(b), 0.0, {b, a});
  }

  // Standardized fits rebuilt from the Appendix correlations. Tolerances carry
  // the first-order effect of half-unit rounding in every correlation used.
  const std::vector<std::string> app_order{"GPDI", "NYSE", "DJ", "SP500", "CPIU", "TB3"};
  auto app_r = [&](const std::string& a, const std::string& b) -> std::string {
    if (a == b) return "";
    const auto ia = std::find(app_order.begin(), app_order.end(), a) - app_order.begin();
    const auto ib = std::find(app_order.begin(), app_order.end(), b) - app_order.begin();
    return ia < ib ? "APP.R." + a + "." + b : "APP.R." + b + "." + a;
  };
  for (const auto& m : fixture.models) {
    const auto& P = m.id;
    const std::string coef_t = m.tables.size() > 2 ? m.tables[2] : P;
    const std::string summary_t = m.tables.size() > 0 ? m.tables[0] : P;
    const double nobs = s.v(P + ".DFTOT") + 1.0;
    std::vector<std::string> used;
    for (const auto& x : m.predictors) used.push_back(app_r(x, m.dependent));
    for (std::size_t i = 0; i < m.predictors.size(); ++i) {
      for (std::size_t j = i + 1; j < m.predictors.size(); ++j) used.push_back(app_r(m.predictors[i], m.predictors[j]));
    }
    auto evaluate = [&](const std::map<std::string, double>& bump) {
      auto r = [&](const std::string& a, const std::string& b) {
        if (a == b) return 1.0;
        const auto key = app_r(a, b);
        const auto it = bump.find(key);
        return s.v(key) + (it == bump.end() ? 0.0 : it->second);
      };
      const std::size_t p = m.predictors.size();
      std::vector<std::vector<double>> rxx(p, std::vector<double>(p));
      std::vector<double> rxy(p);
      for (std::size_t i = 0; i < p; ++i) {
        rxy[i] = r(m.predictors[i], m.dependent);
        for (std::size_t j = 0; j < p; ++j) rxx[i][j] = r(m.predictors[i], m.predictors[j]);
      }
      return fit_from_correlations(rxx, rxy, nobs);
    };
    const auto base = evaluate({});
    auto bound = [&](auto&& pick, const std::string& result) {
      double b = s.rd(result);
      for (const auto& key : used) {
        const double h = 1e-7;
        const double slope = (pick(evaluate({{key, h}})) - pick(evaluate({{key, -h}}))) / (2.0 * h);
        b += std::fabs(slope) * s.rd(key);
      }
      return b;
    };
    auto with_result = [&](const std::string& result) {
      auto in = used;
      in.push_back(result);
      return in;
    };
    const auto rsq = P + ".RSQ";
    s.add(P + " R^2 from Appendix correlations", "correlation-route", summary_t, s.v(rsq), base.r_square,
          bound([](const CorrelationFit& f) { return f.r_square; }, rsq), with_result(rsq));
    for (std::size_t k = 0; k < m.predictors.size(); ++k) {
      const auto& x = m.predictors[k];
      const auto beta = P + "." + x + ".BETA", t = P + "." + x + ".T";
      s.add(P + " " + x + " Beta from Appendix correlations", "correlation-route", coef_t, s.v(beta), base.beta[k],
            bound([k](const CorrelationFit& f) { return f.beta[k]; }, beta), with_result(beta));
      s.add(P + " " + x + " t from Appendix correlations", "correlation-route", coef_t, s.v(t), base.t[k],
            bound([k](const CorrelationFit& f) { return f.t[k]; }, t), with_result(t));
    }
  }

  {
    // Simple regression: standardized slope equals r at displayed precision.
    auto round3 = [](double x) { return std::round(x * 1000.0) / 1000.0; };
    s.add("M2 |Beta| = |r(CPIU,SP500)| at 3 decimals", "beta-r-bridge", "Table 2-5",
          round3(std::fabs(s.v("M2.SP500.BETA"))), round3(std::fabs(s.v("T2-2.R.CPIU.SP500"))), 1e-12,
          {"M2.SP500.BETA", "T2-2.R.CPIU.SP500"});
  }

  const std::vector<std::string> app{"GPDI", "NYSE", "DJ", "SP500", "CPIU", "TB3"};
  const auto app_n = static_cast<std::size_t>(std::lround(s.v("APP.N")));
  for (std::size_t i = 0; i < app.size(); ++i) {
    for (std::size_t j = i + 1; j < app.size(); ++j) {
      const auto key = app[i] + "." + app[j];
      const double p = correlation_p_value(s.v("APP.R." + key), app_n);
      s.add("Sig. of r(" + app[i] + "," + app[j] + "), n = " + std::to_string(app_n), "p-value", "Appendix",
            s.v("APP.SIG." + key), p, 0.005, {"APP.R." + key, "APP.N", "APP.SIG." + key});
      s.add("'**' on r(" + app[i] + "," + app[j] + ") iff p < .01", "significance-flag", "Appendix",
            s.v("APP.FLAG." + key), p < 0.01 ? 1.0 : 0.0, 0.0, {"APP.R." + key, "APP.N", "APP.FLAG." + key});
    }
  }
  return s.checks;
}

RegressionModel fixture_model(const StatisticsFixture& fixture, const std::string& model_id) {
  const FixtureModel* fm = nullptr;
  for (const auto& m : fixture.models) {
    if (m.id == model_id) fm = &m;
  }
  if (fm == nullptr) throw Error(ErrorKind::FixtureError, "no model '" + model_id + "'");
  auto v = [&](const std::string& k) { return fixture.value(model_id + "." + k); };

  RegressionModel model;
  model.dependent = fm->dependent;
  model.predictors = fm->predictors;
  model.n = static_cast<std::size_t>(std::lround(v("DFTOT"))) + 1;
  model.summary = {v("R"), v("RSQ"), v("ADJ"), v("SEE")};
  auto& a = model.anova;
  a.ss_regression = v("SSREG");
  a.ss_residual = v("SSRES");
  a.ss_total = v("SSTOT");
  a.df_regression = static_cast<int>(std::lround(v("DFREG")));
  a.df_residual = static_cast<int>(std::lround(v("DFRES")));
  a.df_total = static_cast<int>(std::lround(v("DFTOT")));
  a.ms_regression = v("MSREG");
  a.ms_residual = v("MSRES");
  a.f = v("F");
  a.p_value = v("SIG");
  std::vector<std::string> names{"CONST"};
  names.insert(names.end(), fm->predictors.begin(), fm->predictors.end());
  for (const auto& name : names) {
    Coefficient c;
    c.name = name == "CONST" ? kConstantName : name;
    c.b = v(name + ".B");
    c.std_error = v(name + ".SE");
    if (name != "CONST") c.beta = v(name + ".BETA");
    c.t = v(name + ".T");
    c.p = v(name + ".SIG");
    model.coefficients.push_back(std::move(c));
  }
  return model;
}

}  // namespace econreg::workflow
