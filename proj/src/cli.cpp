#include "econreg/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "econreg/error.hpp"
#include "econreg/figure.hpp"
#include "econreg/format.hpp"
#include "econreg/json_io.hpp"
#include "econreg/report.hpp"
#include "econreg/workflow.hpp"

namespace econreg {

namespace {

namespace fs = std::filesystem;

constexpr const char* kOutputDirEnv = "ECONREG_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Dataset load(const std::string& path, std::ostream& err) {
  auto loaded = load_csv(path);
  if (!loaded.dropped_rows.empty()) {
    err << "note: dropped " << loaded.dropped_rows.size() << " incomplete row(s):";
    for (auto r : loaded.dropped_rows) err << ' ' << r;
    err << '\n';
  }
  return std::move(loaded.dataset);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::UnreadableFile, "cannot write '" + path.string() + "'");
  f << text;
}

std::string verdict_line(const std::string& what, const inference::TestVerdict& v) {
  const bool is_t = v.statistic_kind == inference::StatisticKind::t;
  std::string df = is_t ? std::to_string(v.df1) : std::to_string(v.df1) + "," + std::to_string(v.df2);
  return what + ": " + std::string(inference::to_string(v.statistic_kind)) + "(" + df + ") = " +
         fmt::fixed(v.statistic, 3) + ", Sig. = " + fmt::fixed(v.p_value, 3) + ", alpha = " +
         fmt::fixed(v.alpha, 3) + " -> " + std::string(inference::to_string(v.decision));
}

std::string model_text(const RegressionModel& model, double alpha, const report::FormatOptions& options) {
  const auto tables = report::render_regression_tables(model, options);
  std::string out = report::to_text(tables.model_summary) + "\n" + report::to_text(tables.anova) + "\n" +
                    report::to_text(tables.coefficients) + "\n" + equation_string(model, 3, !options.plain) + "\n\n";
  const auto verdicts = workflow::verdict_report(model, alpha);
  out += verdict_line("overall F (H0: all slopes zero)", verdicts.front()) + "\n";
  for (std::size_t i = 0; i < model.coefficients.size(); ++i) {
    out += verdict_line(model.coefficients[i].name, verdicts[i + 1]) + "\n";
  }
  return out;
}

nlohmann::json model_json(const RegressionModel& model, double alpha) {
  auto j = json::to_json(model);
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : workflow::verdict_report(model, alpha)) verdicts.push_back(json::to_json(v));
  j["verdicts"] = verdicts;
  j["equation"] = equation_string(model, 3, true);
  return j;
}

int run_correlate(const std::string& csv, const std::vector<std::string>& vars, bool as_json, bool plain,
                  std::ostream& out, std::ostream& err) {
  if (vars.size() < 2) throw UsageError("correlate: --vars needs at least two names");
  const auto ds = load(csv, err);
  const auto m = correlation_matrix(ds, vars);
  report::FormatOptions options;
  options.plain = plain;
  const auto table = report::render_correlation_table(m, options);
  if (as_json) {
    out << nlohmann::json{{"matrix", json::to_json(m)}, {"table", json::to_json(table)}}.dump(2) << '\n';
  } else {
    out << report::to_text(table);
  }
  return kExitOk;
}

int run_regress(const std::string& csv, const std::string& dep, const std::vector<std::string>& preds, double alpha,
                bool as_json, bool plain, std::ostream& out, std::ostream& err) {
  if (preds.empty()) throw UsageError("regress: --pred needs at least one name");
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("regress: --alpha must lie in (0,1)");
  const auto ds = load(csv, err);
  const auto model = fit(ds, dep, preds);
  for (const auto& w : model.warnings) err << "warning: " << w << '\n';
  report::FormatOptions options;
  options.plain = plain;
  if (as_json) {
    out << model_json(model, alpha).dump(2) << '\n';
  } else {
    out << model_text(model, alpha, options);
  }
  return kExitOk;
}

std::string diff_text(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", d);
  return buf;
}

int run_paper_verify(const std::string& fixture_path, bool as_json, std::ostream& out) {
  const auto fixture = fixture_path.empty() ? workflow::builtin_fixture() : workflow::load_fixture(fixture_path);
  const auto checks = workflow::paper_consistency_suite(fixture);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;

  report::FormatOptions options;
  options.labels = fixture.labels;
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back(json::to_json(c));
    out << nlohmann::json{{"checks", arr}, {"total", checks.size()}, {"failed", failed}}.dump(2) << '\n';
  } else {
    for (const auto& m : fixture.models) {
      auto model = workflow::fixture_model(fixture, m.id);
      auto opts = options;
      if (m.dependent_label) opts.labels[m.dependent] = *m.dependent_label;
      const auto tables = report::render_regression_tables(model, opts);
      out << report::to_text(tables.model_summary) << '\n'
          << report::to_text(tables.anova) << '\n'
          << report::to_text(tables.coefficients) << '\n';
    }
    for (const auto& c : checks) {
      out << (c.passed ? "PASS" : "FAIL") << "  [" << c.table << "] " << c.label << ": expected "
          << fmt::plain(c.expected) << ", computed " << fmt::plain(c.computed) << ", |diff| "
          << diff_text(std::fabs(c.expected - c.computed)) << " <= tol "
          << fmt::plain(c.tolerance) << '\n';
    }
    out << checks.size() - failed << "/" << checks.size() << " consistency checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitConsistencyFailure;
}

int run_paper_run(const std::string& csv, std::string out_dir, const workflow::VariableConfig& config, double alpha,
                  std::ostream& out, std::ostream& err) {
  if (out_dir.empty()) {
    const char* env = std::getenv(kOutputDirEnv);
    out_dir = env != nullptr && *env != '\0' ? env : "econreg-output";
  }
  auto loaded = load_csv(csv);
  if (!loaded.dropped_rows.empty()) err << "note: dropped " << loaded.dropped_rows.size() << " incomplete row(s)\n";
  const auto& ds = loaded.dataset;
  const auto stages = workflow::run_staged_analysis(ds, config);

  const fs::path dir(out_dir);
  fs::create_directories(dir);
  report::FormatOptions options;
  options.labels = workflow::builtin_fixture().labels;

  auto write_table = [&](const std::string& name, const report::ReportTable& t) {
    write_file(dir / (name + ".txt"), report::to_text(t));
  };

  write_table("table-1-1", report::render_correlation_table(*stages[0].matrix, options));
  write_table("table-2-1", report::render_correlation_table(*stages[1].matrix, options));
  // Model tables are numbered 2-3..2-5, 3-1..3-3 and 4-1..4-3.
  const std::vector<std::pair<int, int>> numbering{{2, 3}, {3, 1}, {4, 1}};
  for (std::size_t s = 1; s < stages.size(); ++s) {
    const auto [chapter, first] = numbering[s - 1];
    const auto tables = report::render_regression_tables(*stages[s].model, options);
    const auto base = "table-" + std::to_string(chapter) + "-";
    write_table(base + std::to_string(first), tables.model_summary);
    write_table(base + std::to_string(first + 1), tables.anova);
    write_table(base + std::to_string(first + 2), tables.coefficients);
    for (const auto& w : stages[s].model->warnings) err << "warning: " << w << '\n';
  }

  std::vector<std::string> all = config.indices;
  all.insert(all.begin(), config.investment);
  all.push_back(config.price);
  all.push_back(config.rate);
  const auto appendix = correlation_matrix(ds, all);
  write_table("table-appendix", report::render_correlation_table(appendix, options));

  const auto& index = stages[1].selected.front();
  std::vector<std::pair<std::string, report::FigureSpec>> figures;
  for (std::size_t i = 0; i < config.indices.size(); ++i) {
    figures.emplace_back("fig-1-" + std::to_string(i + 1), report::line_spec(ds.column(config.indices[i])));
  }
  int k = static_cast<int>(config.indices.size());
  for (std::size_t i = 0; i < config.indices.size(); ++i) {
    for (std::size_t j = i + 1; j < config.indices.size(); ++j) {
      figures.emplace_back("fig-1-" + std::to_string(++k),
                           report::scatter_spec(ds, config.indices[i], config.indices[j]));
    }
  }
  figures.emplace_back("fig-2-1", report::line_spec(ds.column(config.price)));
  figures.emplace_back("fig-2-2", report::scatter_spec(ds, index, config.price));
  figures.emplace_back("fig-3-1", report::line_spec(ds.column(config.rate)));
  figures.emplace_back("fig-3-2", report::scatter_spec(ds, index, config.rate));
  figures.emplace_back("fig-3-3", report::scatter_spec(ds, config.price, config.rate));
  figures.emplace_back("fig-4-1", report::line_spec(ds.column(config.investment)));
  figures.emplace_back("fig-4-2", report::scatter_spec(ds, index, config.investment));
  figures.emplace_back("fig-4-3", report::scatter_spec(ds, config.price, config.investment));
  figures.emplace_back("fig-4-4", report::scatter_spec(ds, config.rate, config.investment));
  for (const auto& [name, spec] : figures) write_file(dir / (name + ".svg"), report::render_figure(spec));

  nlohmann::json results{{"n", ds.n()}, {"dropped_rows", loaded.dropped_rows}, {"alpha", alpha}};
  nlohmann::json stage_json = nlohmann::json::array();
  for (const auto& st : stages) {
    auto j = json::to_json(st);
    if (st.model) {
      nlohmann::json verdicts = nlohmann::json::array();
      for (const auto& v : workflow::verdict_report(*st.model, alpha)) verdicts.push_back(json::to_json(v));
      j["verdicts"] = verdicts;
    }
    stage_json.push_back(std::move(j));
  }
  results["stages"] = stage_json;
  results["appendix"] = json::to_json(appendix);
  write_file(dir / "results.json", results.dump(2) + "\n");

  for (const auto& st : stages) {
    out << workflow::to_string(st.plan.stage_id) << ":\n";
    for (const auto& d : st.decisions) out << "  " << d << '\n';
  }
  out << "wrote " << figures.size() << " figures and tables to " << dir.string() << '\n';
  return kExitOk;
}

int run_plot(const std::string& csv, const std::string& x, const std::string& y, const std::string& kind,
             const std::string& out_file, std::ostream& out, std::ostream& err) {
  const auto ds = load(csv, err);
  report::FigureSpec spec;
  if (x == "YEAR" || x == "year") {
    spec = report::line_spec(ds.column(y));
  } else {
    spec = report::scatter_spec(ds, x, y);
  }
  spec.kind = kind == "line" ? report::FigureKind::line : report::FigureKind::scatter;
  if (spec.kind == report::FigureKind::line && x != "YEAR" && x != "year") {
    spec.title = y + " BY " + x;
  }
  const auto svg = report::render_figure(spec);
  if (out_file.empty()) {
    out << svg;
  } else {
    write_file(out_file, svg);
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation, OLS regression and staged GPDI analysis over annual time series", "econreg"};
  app.require_subcommand(1);

  std::string csv;
  std::vector<std::string> vars;
  bool as_json = false;
  bool as_text = false;
  bool plain = false;
  auto* correlate = app.add_subcommand("correlate", "Pearson correlation matrix with significance");
  correlate->add_option("csv", csv, "input CSV (YEAR first)")->required();
  correlate->add_option("--vars", vars, "comma-separated variable names")->delimiter(',')->required();
  auto* cj = correlate->add_flag("--json", as_json, "JSON output");
  correlate->add_flag("--text", as_text, "text table output (default)")->excludes(cj);
  correlate->add_flag("--plain", plain, "full-precision numbers");

  std::string dep;
  std::vector<std::string> preds;
  double alpha = 0.05;
  auto* regress = app.add_subcommand("regress", "OLS with intercept, ANOVA and coefficient tests");
  regress->add_option("csv", csv, "input CSV (YEAR first)")->required();
  regress->add_option("--dep", dep, "dependent variable")->required();
  regress->add_option("--pred", preds, "comma-separated predictors")->delimiter(',')->required();
  regress->add_option("--alpha", alpha, "significance level");
  auto* rj = regress->add_flag("--json", as_json, "JSON output");
  regress->add_flag("--text", as_text, "text output (default)")->excludes(rj);
  regress->add_flag("--plain", plain, "full-precision numbers");

  std::string fixture_path;
  auto* verify = app.add_subcommand("paper-verify", "check the published statistics for internal consistency");
  verify->add_option("--fixture", fixture_path, "fixture JSON (default: built-in)");
  verify->add_flag("--json", as_json, "JSON report");

  std::string out_dir;
  workflow::VariableConfig config;
  auto* run = app.add_subcommand("paper-run", "staged analysis; writes tables, figures and results.json");
  run->add_option("csv", csv, "input CSV (YEAR first)")->required();
  run->add_option("--out", out_dir, std::string("output directory (default: $") + kOutputDirEnv + " or econreg-output)");
  run->add_option("--alpha", alpha, "significance level");
  run->add_option("--indices", config.indices, "stock index columns, in tie-break order")->delimiter(',');
  run->add_option("--price", config.price, "price level column");
  run->add_option("--rate", config.rate, "interest rate column");
  run->add_option("--investment", config.investment, "investment column");

  std::string x, y, kind = "scatter", out_file;
  auto* plot = app.add_subcommand("plot", "SVG scatter or line figure");
  plot->add_option("csv", csv, "input CSV (YEAR first)")->required();
  plot->add_option("--x", x, "x variable (YEAR for a time axis)")->required();
  plot->add_option("--y", y, "y variable")->required();
  plot->add_option("--kind", kind, "scatter or line")->check(CLI::IsMember({"scatter", "line"}));
  plot->add_option("--out", out_file, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*correlate) return run_correlate(csv, vars, as_json, plain, out, err);
    if (*regress) return run_regress(csv, dep, preds, alpha, as_json, plain, out, err);
    if (*verify) return run_paper_verify(fixture_path, as_json, out);
    if (*run) return run_paper_run(csv, out_dir, config, alpha, out, err);
    if (*plot) return run_plot(csv, x, y, kind, out_file, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitAnalysisError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAnalysisError;
  }
  return kExitUsage;
}

}  // namespace econreg
