#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "econreg/dataset.hpp"
#include "econreg/descriptive.hpp"
#include "econreg/error.hpp"
#include "econreg/figure.hpp"
#include "econreg/inference.hpp"
#include "econreg/json_io.hpp"
#include "econreg/ols.hpp"
#include "econreg/report.hpp"
#include "econreg/workflow.hpp"

namespace py = pybind11;
using namespace econreg;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Correlation, OLS and staged GPDI analysis engine";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Series>(m, "Series")
      .def(py::init<std::string, std::vector<int>, std::vector<double>>(), py::arg("name"), py::arg("years"),
           py::arg("values"))
      .def_property_readonly("name", &Series::name)
      .def_property_readonly("years", &Series::years)
      .def_property_readonly("values", &Series::values)
      .def("__len__", &Series::size);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<std::vector<Series>>())
      .def_property_readonly("n", &Dataset::n)
      .def_property_readonly("years", &Dataset::years)
      .def_property_readonly("names", &Dataset::names)
      .def("column", &Dataset::column, py::return_value_policy::copy);

  py::class_<LoadResult>(m, "LoadResult")
      .def_readonly("dataset", &LoadResult::dataset)
      .def_readonly("dropped_rows", &LoadResult::dropped_rows)
      .def_readonly("raw_rows", &LoadResult::raw_rows);

  m.def("load_csv", [](const std::filesystem::path& p) { return load_csv(p); }, py::arg("path"));
  m.def("parse_csv", [](const std::string& text) { return parse_csv(text); }, py::arg("text"));
  m.def("align", &align, py::arg("series"));

  py::class_<MomentSummary>(m, "MomentSummary")
      .def_readonly("n", &MomentSummary::n)
      .def_readonly("mean", &MomentSummary::mean)
      .def_readonly("sum_sq_dev", &MomentSummary::sum_sq_dev)
      .def_property_readonly("sd", &MomentSummary::sd);
  py::class_<CorrelationCell>(m, "CorrelationCell")
      .def_readonly("r", &CorrelationCell::r)
      .def_readonly("p_two_tailed", &CorrelationCell::p_two_tailed)
      .def_readonly("sscp", &CorrelationCell::sscp)
      .def_readonly("covariance", &CorrelationCell::covariance)
      .def_readonly("n", &CorrelationCell::n)
      .def_readonly("significant_01", &CorrelationCell::significant_01);
  py::class_<CorrelationMatrix>(m, "CorrelationMatrix")
      .def_readonly("variable_names", &CorrelationMatrix::variable_names)
      .def_readonly("cells", &CorrelationMatrix::cells)
      .def("to_json", [](const CorrelationMatrix& c) { return json::to_json(c).dump(); })
      .def("to_text", [](const CorrelationMatrix& c, bool plain) {
        report::FormatOptions o;
        o.plain = plain;
        return report::to_text(report::render_correlation_table(c, o));
      }, py::arg("plain") = false);

  m.def("moments", [](const Series& s) { return moments(s); });
  m.def("sscp", [](const Series& x, const Series& y) { return sscp(x, y); });
  m.def("pearson", &pearson);
  m.def("correlation_matrix", &correlation_matrix, py::arg("dataset"), py::arg("names"));

  m.def("log_gamma", &inference::log_gamma);
  m.def("reg_inc_beta", &inference::reg_inc_beta, py::arg("x"), py::arg("a"), py::arg("b"));
  m.def("t_cdf", &inference::t_cdf, py::arg("t"), py::arg("df"));
  m.def("f_cdf", &inference::f_cdf, py::arg("f"), py::arg("df1"), py::arg("df2"));

  py::class_<Coefficient>(m, "Coefficient")
      .def_readonly("name", &Coefficient::name)
      .def_readonly("b", &Coefficient::b)
      .def_readonly("std_error", &Coefficient::std_error)
      .def_readonly("beta", &Coefficient::beta)
      .def_readonly("t", &Coefficient::t)
      .def_readonly("p", &Coefficient::p);
  py::class_<RegressionModel>(m, "RegressionModel")
      .def_readonly("dependent", &RegressionModel::dependent)
      .def_readonly("predictors", &RegressionModel::predictors)
      .def_readonly("n", &RegressionModel::n)
      .def_readonly("coefficients", &RegressionModel::coefficients)
      .def_property_readonly("r_square", [](const RegressionModel& r) { return r.summary.r_square; })
      .def_property_readonly("adj_r_square", [](const RegressionModel& r) { return r.summary.adj_r_square; })
      .def_property_readonly("f", [](const RegressionModel& r) { return r.anova.f; })
      .def_readonly("warnings", &RegressionModel::warnings)
      .def("to_json", [](const RegressionModel& r) { return json::to_json(r).dump(); })
      .def("to_text", [](const RegressionModel& r) {
        const auto t = report::render_regression_tables(r);
        return report::to_text(t.model_summary) + "\n" + report::to_text(t.anova) + "\n" +
               report::to_text(t.coefficients);
      });

  m.def("fit", &fit, py::arg("dataset"), py::arg("dependent"), py::arg("predictors"));
  m.def("predict", &predict, py::arg("model"), py::arg("inputs"));
  m.def("residuals", &residuals, py::arg("model"), py::arg("dataset"));
  m.def("equation_string", &equation_string, py::arg("model"), py::arg("decimals") = 3,
        py::arg("spss_style") = true);

  m.def("verdict", [](double statistic, const std::string& kind, int df1, int df2, double alpha) {
    const auto v = inference::verdict(statistic, kind == "F" ? inference::StatisticKind::F : inference::StatisticKind::t,
                                      df1, df2, alpha);
    return json::to_json(v).dump();
  }, py::arg("statistic"), py::arg("kind"), py::arg("df1"), py::arg("df2") = 0, py::arg("alpha") = 0.05);

  m.def("run_staged_analysis", [](const Dataset& ds) {
    py::list out;
    for (const auto& st : workflow::run_staged_analysis(ds)) out.append(json::to_json(st).dump());
    return out;
  }, py::arg("dataset"));
  m.def("paper_consistency_suite", [] {
    py::list out;
    for (const auto& c : workflow::paper_consistency_suite()) out.append(json::to_json(c).dump());
    return out;
  });

  m.def("render_scatter_svg", [](const Dataset& ds, const std::string& x, const std::string& y) {
    return report::render_figure(report::scatter_spec(ds, x, y));
  }, py::arg("dataset"), py::arg("x"), py::arg("y"));
}
