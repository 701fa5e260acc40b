#include "econreg/inference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "econreg/error.hpp"

namespace econreg::inference {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorKind::DomainError, what); }

void require_df(int df, const char* name) {
  if (df < 1) domain(std::string(name) + " must be >= 1, got " + std::to_string(df));
}

double clamp_unit(double p) { return std::clamp(p, 0.0, 1.0); }

// Continued fraction for I_x(a, b) (modified Lentz). Converges quickly for
// x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double x, double a, double b) {
  constexpr int kMaxIter = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  domain("incomplete beta continued fraction did not converge (a=" + std::to_string(a) +
         ", b=" + std::to_string(b) + ", x=" + std::to_string(x) + ")");
}

// {I_x(a,b), 1 - I_x(a,b)} where y = 1 - x is supplied exactly by the caller.
std::pair<double, double> inc_beta_both(double x, double y, double a, double b) {
  if (x <= 0.0) return {0.0, 1.0};
  if (y <= 0.0) return {1.0, 0.0};
  const double log_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) + a * std::log(x) +
                           b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    const double lower = clamp_unit(front * beta_continued_fraction(x, a, b) / a);
    return {lower, 1.0 - lower};
  }
  const double upper = clamp_unit(front * beta_continued_fraction(y, b, a) / b);
  return {1.0 - upper, upper};
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) domain("log_gamma requires x > 0, got " + std::to_string(x));
  if (std::isinf(x)) return x;
  if (x < 0.5) {
    // Reflection: Γ(x)Γ(1-x) = π / sin(πx).
    return std::log(std::numbers::pi / std::fabs(std::sin(std::numbers::pi * x))) -
           log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

double reg_inc_beta(double x, double a, double b) {
  if (!(x >= 0.0 && x <= 1.0)) domain("reg_inc_beta requires x in [0,1], got " + std::to_string(x));
  if (!(a > 0.0) || !(b > 0.0) || std::isinf(a) || std::isinf(b)) {
    domain("reg_inc_beta requires finite a, b > 0");
  }
  return inc_beta_both(x, 1.0 - x, a, b).first;
}

double t_two_tailed(double t, int df) {
  require_df(df, "df");
  if (std::isnan(t)) domain("t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double t2 = t * t;
  const double denom = df + t2;
  return inc_beta_both(df / denom, t2 / denom, 0.5 * df, 0.5).first;
}

double t_cdf(double t, int df) {
  require_df(df, "df");
  if (std::isnan(t)) domain("t statistic is NaN");
  if (t == 0.0) return 0.5;
  const double tail = 0.5 * t_two_tailed(t, df);
  return t > 0.0 ? 1.0 - tail : tail;
}

namespace {

std::pair<double, double> f_both(double f, int df1, int df2) {
  require_df(df1, "df1");
  require_df(df2, "df2");
  if (std::isnan(f) || f < 0.0) domain("F statistic must be >= 0, got " + std::to_string(f));
  if (std::isinf(f)) return {1.0, 0.0};
  const double scaled = df1 * f;
  const double denom = scaled + df2;
  return inc_beta_both(scaled / denom, df2 / denom, 0.5 * df1, 0.5 * df2);
}

}  // namespace

double f_cdf(double f, int df1, int df2) { return f_both(f, df1, df2).first; }

double f_upper_tail(double f, int df1, int df2) { return f_both(f, df1, df2).second; }

std::string_view to_string(StatisticKind kind) noexcept {
  return kind == StatisticKind::t ? "t" : "F";
}

std::string_view to_string(Decision decision) noexcept {
  return decision == Decision::RejectH0 ? "RejectH0" : "FailToRejectH0";
}

TestVerdict verdict(double statistic, StatisticKind kind, int df1, int df2, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) domain("alpha must lie in (0,1), got " + std::to_string(alpha));
  TestVerdict v;
  v.statistic = statistic;
  v.statistic_kind = kind;
  v.alpha = alpha;
  v.df1 = df1;
  if (kind == StatisticKind::t) {
    v.df2 = 0;
    v.p_value = t_two_tailed(statistic, df1);
  } else {
    v.df2 = df2;
    v.p_value = f_upper_tail(statistic, df1, df2);
  }
  v.decision = v.p_value < alpha ? Decision::RejectH0 : Decision::FailToRejectH0;
  return v;
}

}  // namespace econreg::inference
