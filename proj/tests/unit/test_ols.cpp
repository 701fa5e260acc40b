#include <doctest.h>

#include <cmath>
#include <random>

#include "econreg/descriptive.hpp"
#include "econreg/ols.hpp"
#include "econreg/workflow.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace econreg;
using testing::kind_of;
using testing::series;

namespace {

struct Instance {
  Dataset ds;
  std::vector<std::string> predictors;
  std::vector<std::vector<double>> cols;
  std::vector<double> y;
};

Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t p) {
  Instance inst{Dataset({series("Y", {0.0})}), {}, {}, {}};
  std::vector<Series> s;
  for (std::size_t j = 0; j < p; ++j) {
    inst.predictors.push_back("X" + std::to_string(j + 1));
    inst.cols.push_back(testing::random_values(rng, n));
    s.push_back(series(inst.predictors.back(), inst.cols.back()));
  }
  inst.y = testing::random_values(rng, n, -50.0, 50.0);
  s.push_back(series("Y", inst.y));
  inst.ds = Dataset(std::move(s));
  return inst;
}

double rel(double a, double b, double scale) { return std::fabs(a - b) / scale; }

}  // namespace

TEST_SUITE("ols") {
  TEST_CASE("perfect fit") {
    const std::vector<double> x{1, 4, 2, 8, 5, 7};
    const Dataset ds({series("X", x), series("Y", x)});
    const auto m = fit(ds, "Y", {"X"});
    CHECK(m.coefficient("X").b == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::fabs(m.coefficient(kConstantName).b) < 1e-13);
    CHECK(m.summary.r_square == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.anova.ss_residual < 1e-24);
    const auto e = residuals(m, ds);
    for (double v : e.values()) CHECK(std::fabs(v) < 1e-13);
  }

  TEST_CASE("symmetric x forces a zero slope") {
    const Dataset ds({series("X", {0, 1, 2}), series("Y", {0, 1, 0})});
    const auto m = fit(ds, "Y", {"X"});
    CHECK(std::fabs(m.coefficient("X").b) < 1e-15);
    CHECK(m.coefficient(kConstantName).b == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(m.n == 3);
    CHECK(m.anova.df_residual == 1);
  }

  TEST_CASE("model layout") {
    std::mt19937_64 rng(3);
    const auto inst = random_instance(rng, 9, 3);
    const auto m = fit(inst.ds, "Y", inst.predictors);
    REQUIRE(m.coefficients.size() == 4);
    CHECK(m.coefficients[0].name == kConstantName);
    CHECK_FALSE(m.coefficients[0].beta.has_value());
    for (std::size_t j = 1; j < 4; ++j) {
      CHECK(m.coefficients[j].name == inst.predictors[j - 1]);
      CHECK(m.coefficients[j].beta.has_value());
    }
    CHECK(m.anova.df_regression == 3);
    CHECK(m.anova.df_residual == 5);
    CHECK(m.anova.df_total == 8);
    CHECK(m.summary.r >= 0.0);
    CHECK(m.summary.r * m.summary.r == doctest::Approx(m.summary.r_square).epsilon(1e-12));
  }

  TEST_CASE("200 random instances against the 50-digit normal equations") {
    std::mt19937_64 rng(20231);
    double worst_coef = 0.0, worst_anova = 0.0, worst_orth = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t p = 1 + rng() % 4;
      const std::size_t n = p + 2 + rng() % (11 - p);
      const auto inst = random_instance(rng, n, p);
      const auto m = fit(inst.ds, "Y", inst.predictors);
      const auto want = oracle::normal_equations(inst.cols, inst.y);
      double scale = 0.0;
      for (double w : want) scale = std::max(scale, std::fabs(w));
      for (std::size_t j = 0; j <= p; ++j) worst_coef = std::max(worst_coef, rel(m.coefficients[j].b, want[j], scale));

      const auto& a = m.anova;
      worst_anova = std::max(worst_anova, rel(a.ss_regression + a.ss_residual, a.ss_total, a.ss_total));

      const auto e = residuals(m, inst.ds).values();
      double ysum = 0.0, esum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        ysum += std::fabs(inst.y[i]);
        esum += e[i];
      }
      worst_orth = std::max(worst_orth, std::fabs(esum) / ysum);
      for (const auto& col : inst.cols) {
        double dot = 0.0, sc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          dot += col[i] * e[i];
          sc += std::fabs(col[i] * inst.y[i]);
        }
        worst_orth = std::max(worst_orth, std::fabs(dot) / sc);
      }
    }
    CHECK(worst_coef <= 1e-8);
    CHECK(worst_anova <= 1e-9);
    CHECK(worst_orth <= 1e-8);
  }

  TEST_CASE("simple-regression bridges: |beta| = |r|, F = t^2, R^2 = r^2") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
      const auto inst = random_instance(rng, 5 + rng() % 30, 1);
      const auto m = fit(inst.ds, "Y", {"X1"});
      const double r = pearson(inst.ds.column("X1"), inst.ds.column("Y")).r;
      const auto& c = m.coefficient("X1");
      CHECK(std::fabs(std::fabs(*c.beta) - std::fabs(r)) <= 1e-9);
      CHECK(std::fabs(m.anova.f - c.t * c.t) <= 1e-9 * std::max(1.0, m.anova.f));
      CHECK(std::fabs(m.summary.r_square - r * r) <= 1e-9);
      CHECK(std::fabs(m.anova.p_value - c.p) <= 1e-9);
    }
  }

  TEST_CASE("predictor affine invariance") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t p = 1 + rng() % 3;
      auto inst = random_instance(rng, p + 4 + rng() % 8, p);
      const auto base = fit(inst.ds, "Y", inst.predictors);
      std::uniform_real_distribution<double> u(-5.0, 5.0);
      double a = u(rng);
      if (std::fabs(a) < 0.1) a = 2.5;
      const double shift = u(rng) * 100.0;
      std::vector<Series> s;
      for (std::size_t j = 0; j < p; ++j) {
        auto v = inst.cols[j];
        if (j == 0) {
          for (auto& x : v) x = a * x + shift;
        }
        s.push_back(series(inst.predictors[j], v));
      }
      s.push_back(series("Y", inst.y));
      const Dataset moved(std::move(s));
      const auto m = fit(moved, "Y", inst.predictors);
      CHECK(std::fabs(m.summary.r_square - base.summary.r_square) <= 1e-9);
      CHECK(std::fabs(m.anova.f - base.anova.f) <= 1e-9 * std::max(1.0, base.anova.f));
      // A negative scale flips the sign of the rescaled predictor's t and Beta.
      for (std::size_t j = 1; j <= p; ++j) {
        const double sign = (j == 1 && a < 0.0) ? -1.0 : 1.0;
        CHECK(std::fabs(sign * m.coefficients[j].t - base.coefficients[j].t) <=
              1e-9 * std::max(1.0, std::fabs(base.coefficients[j].t)));
        CHECK(std::fabs(sign * *m.coefficients[j].beta - *base.coefficients[j].beta) <= 1e-9);
      }
      CHECK(m.coefficients[1].b * a == doctest::Approx(base.coefficients[1].b).epsilon(1e-9));
      CHECK(m.coefficients[1].std_error * std::fabs(a) == doctest::Approx(base.coefficients[1].std_error).epsilon(1e-9));
      const auto f0 = fitted_values(base, inst.ds).values();
      const auto f1 = fitted_values(m, moved).values();
      for (std::size_t i = 0; i < f0.size(); ++i) CHECK(std::fabs(f0[i] - f1[i]) <= 1e-9 * 50.0);
    }
  }

  TEST_CASE("standard errors match sigma^2 (X'X)^-1 for a simple fit") {
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7};
    const std::vector<double> y{2.1, 3.9, 6.2, 7.8, 10.1, 12.2, 13.8};
    const auto m = fit(Dataset({series("X", x), series("Y", y)}), "Y", {"X"});
    const double sxx = 28.0, mean = 4.0;
    const double s2 = m.anova.ms_residual;
    CHECK(m.coefficient("X").std_error == doctest::Approx(std::sqrt(s2 / sxx)).epsilon(1e-12));
    CHECK(m.coefficient(kConstantName).std_error ==
          doctest::Approx(std::sqrt(s2 * (1.0 / 7.0 + mean * mean / sxx))).epsilon(1e-12));
    CHECK(m.summary.std_error_estimate == doctest::Approx(std::sqrt(s2)).epsilon(1e-14));
  }

  TEST_CASE("errors") {
    const Dataset ds({series("A", {1, 2, 3, 4, 5, 6}), series("B", {2, 1, 4, 3, 6, 5}),
                      series("C", {5, 4, 11, 10, 17, 16}), series("K", {3, 3, 3, 3, 3, 3}),
                      series("Y", {1, 3, 2, 5, 4, 6})});
    // C = A + 2B.
    try {
      fit(ds, "Y", {"A", "B", "C"});
      FAIL("expected RankDeficient");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankDeficient);
      const std::string msg = e.what();
      CHECK(msg.find("{A, B, C}") != std::string::npos);
    }
    CHECK(kind_of([&] { fit(ds, "Y", {"A", "A"}); }) == ErrorKind::RankDeficient);
    CHECK(kind_of([&] { fit(ds, "Y", {"K"}); }) == ErrorKind::ConstantPredictor);
    CHECK(kind_of([&] { fit(ds, "Y", {"Q"}); }) == ErrorKind::UnknownVariable);
    CHECK(kind_of([&] { fit(ds, "Q", {"A"}); }) == ErrorKind::UnknownVariable);
    CHECK(kind_of([&] { fit(ds, "Y", {}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { fit(ds, "Y", {"Y"}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { fit(ds, "K", {"A"}); }) == ErrorKind::ZeroVariance);
    CHECK(kind_of([&] { fit(ds, "Y", {"A", "B", "C", "K", "Y"}); }) != ErrorKind::RankDeficient);
    const Dataset small({series("A", {1, 2, 3}), series("B", {3, 1, 2}), series("Y", {1, 0, 1})});
    CHECK(kind_of([&] { fit(small, "Y", {"A", "B"}); }) == ErrorKind::TooFewObservations);
    CHECK(kind_of([&] { fit(ds, "Y", {"A"}).coefficient("B"); }) == ErrorKind::UnknownVariable);
  }

  TEST_CASE("ill-conditioned design carries a warning") {
    std::mt19937_64 rng(9);
    auto x1 = testing::random_values(rng, 20);
    auto noise = testing::random_values(rng, 20, -1e-6, 1e-6);
    std::vector<double> x2(20);
    for (std::size_t i = 0; i < 20; ++i) x2[i] = x1[i] + noise[i];
    const auto y = testing::random_values(rng, 20);
    const auto m = fit(Dataset({series("X1", x1), series("X2", x2), series("Y", y)}), "Y", {"X1", "X2"});
    CHECK(m.condition_estimate > kConditionWarning);
    CHECK(m.warnings.size() == 1);

    const auto well = fit(Dataset({series("X1", x1), series("Y", y)}), "Y", {"X1"});
    CHECK(well.condition_estimate == doctest::Approx(1.0));
    CHECK(well.warnings.empty());
  }

  TEST_CASE("predict") {
    const auto& fx = workflow::builtin_fixture();
    const auto m4 = workflow::fixture_model(fx, "M4");
    CHECK(predict(m4, {{"SP500", 100}, {"CPIU", 50}, {"TB3", 5}}) == doctest::Approx(246.855).epsilon(1e-12));
    CHECK(predict(m4, {{"SP500", 0}, {"CPIU", 0}, {"TB3", 0}}) == doctest::Approx(-162.815).epsilon(1e-12));
    const auto m2 = workflow::fixture_model(fx, "M2");
    CHECK(predict(m2, {{"SP500", 0}}) == doctest::Approx(52.892).epsilon(1e-12));
    CHECK(predict(m2, {{"SP500", 100}}) == doctest::Approx(64.392).epsilon(1e-12));
    CHECK(predict(m2, {{"SP500", 100}, {"EXTRA", 1}}) == doctest::Approx(64.392).epsilon(1e-12));
    CHECK(kind_of([&] { predict(m4, {{"SP500", 100}, {"CPIU", 50}}); }) == ErrorKind::MissingPredictor);
  }

  TEST_CASE("residuals and fitted values") {
    const Dataset ds({series("X", {1, 2, 3, 4, 5}), series("Y", {2, 4, 5, 4, 5})});
    const auto m = fit(ds, "Y", {"X"});
    const auto e = residuals(m, ds);
    CHECK(e.name() == "Y.residual");
    CHECK(e.years() == ds.years());
    double ss = 0.0;
    for (double v : e.values()) ss += v * v;
    CHECK(ss == doctest::Approx(m.anova.ss_residual).epsilon(1e-12));
    const auto f = fitted_values(m, ds);
    for (std::size_t i = 0; i < 5; ++i) CHECK(f.values()[i] + e.values()[i] == doctest::Approx(ds.column("Y").values()[i]));

    const Dataset shorter({series("X", {1, 2, 3, 4}), series("Y", {2, 4, 5, 4})});
    CHECK(kind_of([&] { residuals(m, shorter); }) == ErrorKind::DatasetMismatch);
    const Dataset renamed({series("Z", {1, 2, 3, 4, 5}), series("Y", {2, 4, 5, 4, 5})});
    CHECK(kind_of([&] { residuals(m, renamed); }) == ErrorKind::DatasetMismatch);

    // Printed residual mean square 860.713 gives the printed SEE 29.3379.
    const auto& fx = workflow::builtin_fixture();
    CHECK(std::fabs(std::sqrt(fx.value("M2.MSRES")) - fx.value("M2.SEE")) <= 0.00005);
    CHECK(std::fabs(fx.value("M2.SSRES") / 41.0 - fx.value("M2.MSRES")) <= 0.0005);
  }

  TEST_CASE("equation_string") {
    const auto& fx = workflow::builtin_fixture();
    auto m4 = workflow::fixture_model(fx, "M4");
    CHECK(equation_string(m4) == "GPDI = -162.815 + .574 * SP500 + 6.031 * CPIU + 10.144 * TB3\n(.039) (.272) (3.156)");
    CHECK(equation_string(workflow::fixture_model(fx, "M3")).substr(0, 42) == "TB3 = 4.278 - .005 * SP500 + .037 * CPIU\n(");
    CHECK(equation_string(workflow::fixture_model(fx, "M2")).substr(0, 30) == "CPIU = 52.892 + .115 * SP500\n(");

    // Column names appear verbatim, so a hyphenated column renders as printed.
    auto m3 = workflow::fixture_model(fx, "M3");
    m3.coefficients[2].name = "CPI-U";
    const auto eq = equation_string(m3);
    CHECK(eq.substr(0, eq.find('\n')) == "TB3 = 4.278 - .005 * SP500 + .037 * CPI-U");

    const Dataset ds({series("X", {0, 1, 2}), series("Y", {0, 1, 0})});
    const auto flat = equation_string(fit(ds, "Y", {"X"}));
    CHECK(flat.substr(0, flat.find('\n')) == "Y = .333 + .000 * X");
    CHECK(equation_string(fit(ds, "Y", {"X"}), 2, false).substr(0, 20) == "Y = 0.33 + 0.00 * X\n");
  }
}
