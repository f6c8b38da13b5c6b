#include <cmath>

#include "doctest.h"
#include "locuskit/realsolve.hpp"
#include "locuskit/univariate.hpp"

using namespace locuskit;

namespace {
Rational q(long n, long d) { return Rational::make(n, d); }
UPoly up(std::vector<Rational> c) { return UPoly(std::move(c)); }
}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(q(2, 4).str() == "1/2");
  CHECK(q(3, -6).str() == "-1/2");
  CHECK(q(0, 5).num() == 0);
  CHECK(q(0, 5).den() == 1);
  CHECK_THROWS_AS(Rational::make(1, 0), InputError);
}

TEST_CASE("rational parse is exact") {
  CHECK(Rational::parse("2.01") == q(201, 100));
  CHECK(Rational::parse("-7/4") == q(-7, 4));
  CHECK(Rational::parse("-.5") == q(-1, 2));
  CHECK(Rational::parse("1e-3") == q(1, 1000));
  CHECK(Rational::parse("19/10") == q(19, 10));
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt s3(0, 1, 3);
  CHECK(s3 * s3 == QuadExt(3));
  CHECK((s3 * s3).is_rational());
  const QuadExt a(q(1, 2), q(1, 2), 3), b(q(1, 2), q(-1, 2), 3);
  CHECK(a * b == QuadExt(q(-1, 2)));
  const QuadExt u(q(3, 7), q(-2, 5), 3);
  CHECK(QuadExt(1) * u == u);
  CHECK(QuadExt(1, -1, 2).sign() < 0);  // 1 - sqrt 2
  CHECK(QuadExt(q(3, 2), -1, 2).sign() > 0);
  CHECK_THROWS_AS(QuadExt(0, 1, 2) * QuadExt(0, 1, 3), InputError);
  CHECK_THROWS_AS(QuadExt(0, 1, 4), InputError);
}

TEST_CASE("interval bisection steps") {
  // t^2 - 3 on [1, 2]: f(3/2) = -3/4 < 0
  CHECK(interval_refine_root(up({-3, 0, 1}), Interval(1, 2)) == Interval(q(3, 2), 2));
  // t - 1 on [0, 2]: midpoint is the root
  CHECK(interval_refine_root(up({-1, 1}), Interval(0, 2)) == Interval(1, 1));
  // t^3 - 2 on [1, 2], two steps
  const UPoly c = up({-2, 0, 0, 1});
  const Interval i2 = interval_refine_root(c, interval_refine_root(c, Interval(1, 2)));
  CHECK(i2 == Interval(q(5, 4), q(3, 2)));
}

TEST_CASE("sturm isolation") {
  const auto r = isolate_real_roots(up({-2, 0, 1}), q(1, 1024));
  REQUIRE(r.size() == 2);
  CHECK(r[0].box.hi < 0);
  CHECK(r[1].box.lo > 0);
  CHECK(r[1].box.width() <= q(1, 1024));
  CHECK(r[1].box.lo.to_double() < std::sqrt(2.0));
  CHECK(r[1].box.hi.to_double() > std::sqrt(2.0));
  const auto e = isolate_real_roots(up({-1, 0, 1}), q(1, 1024));
  REQUIRE(e.size() == 2);
  CHECK(e[0].exact());
  CHECK(e[1].box.lo == 1);
  CHECK(isolate_real_roots(up({1, 0, 1}), q(1, 2)).empty());
  // repeated root counted once
  CHECK(isolate_real_roots(up({1, -2, 1}), q(1, 2)).size() == 1);
}

TEST_CASE("enclosure of sqrt") {
  const Interval i = enclose(QuadExt(q(1, 2), q(1, 2), 3), 40);
  CHECK(i.contains_zero() == false);
  CHECK(i.lo.to_double() <= 0.5 + std::sqrt(3.0) / 2);
  CHECK(i.hi.to_double() >= 0.5 + std::sqrt(3.0) / 2);
  CHECK(i.width() <= Rational::make(1, Integer(1) << 40));
}
