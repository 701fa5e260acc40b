#pragma once

#include <string_view>

namespace econreg::inference {

/// ln Γ(x) for x > 0. Lanczos series (g = 7); |error| < 1e-13 on [0.5, 300].
double log_gamma(double x);

/// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double x, double a, double b);

/// P(T <= t) for Student's t with `df` degrees of freedom.
double t_cdf(double t, int df);

/// P(|T| >= |t|), computed directly from the tail (no 1 - cdf cancellation).
double t_two_tailed(double t, int df);

/// P(F <= f) for Fisher's F(df1, df2).
double f_cdf(double f, int df1, int df2);

/// P(F >= f), the upper tail.
double f_upper_tail(double f, int df1, int df2);

enum class StatisticKind { t, F };
enum class Decision { RejectH0, FailToRejectH0 };

std::string_view to_string(StatisticKind kind) noexcept;
std::string_view to_string(Decision decision) noexcept;

/// Outcome of a significance test. For t-tests the degrees of freedom live in
/// df1 and df2 is 0. The null hypothesis is a zero parameter (ρ = 0 or all
/// slopes zero).
struct TestVerdict {
  double statistic = 0.0;
  StatisticKind statistic_kind = StatisticKind::t;
  int df1 = 0;
  int df2 = 0;
  double p_value = 1.0;
  double alpha = 0.05;
  Decision decision = Decision::FailToRejectH0;
};

/// Two-tailed p for t, upper-tail p for F; reject iff p < alpha.
TestVerdict verdict(double statistic, StatisticKind kind, int df1, int df2, double alpha);

}  // namespace econreg::inference
