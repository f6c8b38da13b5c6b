#include "doctest.h"
#include "property_suites.hpp"

TEST_CASE("groebner invariants on random systems") {
  const auto r = lk_test::groebner_suite(50, 2024);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases == 50);
}

TEST_CASE("factorization reconstructs random products") {
  const auto r = lk_test::factorization_suite(100, 7);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases == 100);
}

TEST_CASE("triangle identities and Euler's inequality") {
  const auto r = lk_test::triangle_suite(100000, 11);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases == 100000);
}
