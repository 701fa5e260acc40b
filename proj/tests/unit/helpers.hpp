#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "econreg/dataset.hpp"
#include "econreg/error.hpp"

namespace testing {

template <typename F>
econreg::ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const econreg::Error& e) {
    return e.kind();
  }
  FAIL("expected an econreg::Error");
  return econreg::ErrorKind::InvalidArgument;
}

inline std::vector<int> years_from(int first, std::size_t n) {
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = first + static_cast<int>(i);
  return y;
}

inline econreg::Series series(const std::string& name, std::vector<double> values, int first_year = 1959) {
  auto years = years_from(first_year, values.size());
  return econreg::Series(name, std::move(years), std::move(values));
}

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

inline econreg::Dataset synthetic_dataset() {
  return econreg::load_csv(std::string(ECONREG_TEST_DATA) + "/synthetic_1959_2001.csv").dataset;
}

}  // namespace testing
