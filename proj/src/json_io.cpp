#include "econreg/json_io.hpp"

#include <cmath>

#include "econreg/error.hpp"

namespace econreg::json {

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const RegressionModel& model) {
  json coefs = json::array();
  for (const auto& c : model.coefficients) {
    coefs.push_back({{"name", c.name},
                     {"b", number(c.b)},
                     {"std_error", number(c.std_error)},
                     {"beta", c.beta ? number(*c.beta) : json(nullptr)},
                     {"t", number(c.t)},
                     {"p", number(c.p)}});
  }
  const auto& s = model.summary;
  const auto& a = model.anova;
  return {{"dependent", model.dependent},
          {"predictors", model.predictors},
          {"n", model.n},
          {"coefficients", coefs},
          {"summary",
           {{"r", number(s.r)},
            {"r_square", number(s.r_square)},
            {"adj_r_square", number(s.adj_r_square)},
            {"std_error_estimate", number(s.std_error_estimate)}}},
          {"anova",
           {{"ss_regression", number(a.ss_regression)},
            {"ss_residual", number(a.ss_residual)},
            {"ss_total", number(a.ss_total)},
            {"df_regression", a.df_regression},
            {"df_residual", a.df_residual},
            {"df_total", a.df_total},
            {"ms_regression", number(a.ms_regression)},
            {"ms_residual", number(a.ms_residual)},
            {"f", number(a.f)},
            {"p_value", number(a.p_value)}}},
          {"condition_estimate", number(model.condition_estimate)},
          {"warnings", model.warnings}};
}

json to_json(const CorrelationMatrix& m) {
  json cells = json::array();
  for (const auto& row : m.cells) {
    json out_row = json::array();
    for (const auto& c : row) {
      out_row.push_back({{"r", number(c.r)},
                         {"p_two_tailed", number(c.p_two_tailed)},
                         {"sscp", number(c.sscp)},
                         {"covariance", number(c.covariance)},
                         {"n", c.n},
                         {"significant_01", c.significant_01}});
    }
    cells.push_back(std::move(out_row));
  }
  return {{"variable_names", m.variable_names}, {"cells", cells}};
}

json to_json(const inference::TestVerdict& v) {
  return {{"statistic", number(v.statistic)},
          {"statistic_kind", std::string(inference::to_string(v.statistic_kind))},
          {"df1", v.df1},
          {"df2", v.df2},
          {"p_value", number(v.p_value)},
          {"alpha", v.alpha},
          {"decision", std::string(inference::to_string(v.decision))}};
}

json to_json(const workflow::ConsistencyCheck& c) {
  return {{"label", c.label},         {"kind", c.kind},           {"table", c.table},
          {"expected", number(c.expected)}, {"computed", number(c.computed)}, {"tolerance", number(c.tolerance)},
          {"passed", c.passed},       {"inputs", c.inputs}};
}

json to_json(const workflow::StageArtifact& stage) {
  json j{{"stage_id", std::string(workflow::to_string(stage.plan.stage_id))},
         {"inputs", stage.plan.inputs},
         {"selection_rule", stage.plan.selection_rule},
         {"outputs", stage.plan.outputs},
         {"selected", stage.selected},
         {"decisions", stage.decisions}};
  j["matrix"] = stage.matrix ? to_json(*stage.matrix) : json(nullptr);
  j["model"] = stage.model ? to_json(*stage.model) : json(nullptr);
  return j;
}

json to_json(const report::ReportTable& table) {
  json headers = json::array();
  for (const auto& tier : table.column_headers) {
    json t = json::array();
    for (const auto& h : tier) t.push_back({{"text", h.text}, {"span", h.span}});
    headers.push_back(std::move(t));
  }
  json notes = json::array();
  for (const auto& f : table.footnotes) notes.push_back({{"marker", f.marker}, {"text", f.text}});
  return {{"title", table.title}, {"column_headers", headers}, {"rows", table.rows}, {"footnotes", notes}};
}

report::ReportTable table_from_json(const json& j) {
  try {
    report::ReportTable t;
    t.title = j.at("title").get<std::string>();
    for (const auto& tier : j.at("column_headers")) {
      std::vector<report::HeaderCell> cells;
      for (const auto& h : tier) cells.push_back({h.at("text").get<std::string>(), h.at("span").get<int>()});
      t.column_headers.push_back(std::move(cells));
    }
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    for (const auto& f : j.at("footnotes")) {
      t.footnotes.push_back({f.at("marker").get<std::string>(), f.at("text").get<std::string>()});
    }
    t.validate();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("table JSON: ") + e.what());
  }
}

}  // namespace econreg::json
