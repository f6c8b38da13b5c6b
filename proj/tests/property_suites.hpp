#pragma once

// Randomized suites shared by the unit tests and the acceptance driver.

#include <cstdint>
#include <string>

namespace lk_test {

struct SuiteResult {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;
};

/// Random systems in 3 variables: the computed basis passes the S-polynomial
/// criterion, every input reduces to 0, and the modular path agrees.
SuiteResult groebner_suite(std::size_t systems, std::uint32_t seed);

/// Random products of small bivariate factors: factor_bivariate reproduces
/// the input and every factor divides it.
SuiteResult factorization_suite(std::size_t polys, std::uint32_t seed);

/// r*s = T, 4RT = abc, r_a + r_b + r_c - r = 4R (1e-10 relative),
/// R >= 2r - 1e-12, and at least one sample with R < 2 r_a.
SuiteResult triangle_suite(std::size_t samples, std::uint32_t seed);

}  // namespace lk_test
