#include <cmath>

#include "doctest.h"
#include "locuskit/univariate.hpp"
#include "locuskit/sysparse.hpp"
#include "support.hpp"

using namespace locuskit;

TEST_CASE("euler systems") {
  const PolySystem r = euler_system({Rational(2), Formulation::kReduced});
  CHECK(r.context->names() == std::vector<std::string>{"a", "b", "c", "r", "x", "y"});
  CHECK(r.elim_vars == std::vector<std::string>{"a", "b", "c", "r"});
  REQUIRE(r.generators.size() == 5);
  CHECK(r.generators[4] == parse_poly("16*r^2*y^2 - a^2*b^2*c^2", r.context));
  const PolySystem t = euler_system({Rational::parse("21/10"), Formulation::kReduced});
  CHECK(t.generators[4] == parse_poly("1764*r^2*y^2 - 100*a^2*b^2*c^2", t.context));
  const PolySystem f = euler_system({Rational::parse("2.1"), Formulation::kFull});
  CHECK(f.generators.back() == parse_poly("10*R - 21*r", f.context));
  CHECK(f.retained_vars() == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(euler_system({Rational(0), Formulation::kReduced}), InputError);
  CHECK_THROWS_AS(euler_system({Rational(-1), Formulation::kFull}), InputError);
  CHECK(parse_formulation("full") == Formulation::kFull);
  CHECK_THROWS_AS(parse_formulation("half"), InputError);
}

TEST_CASE("triangle metrics") {
  const double s3 = std::sqrt(3.0);
  const TriangleMetrics m = metrics(0.5, s3 / 2);
  CHECK(m.a == doctest::Approx(1));
  CHECK(m.b == doctest::Approx(1));
  CHECK(m.s == doctest::Approx(1.5));
  CHECK(m.T == doctest::Approx(s3 / 4));
  CHECK(m.r == doctest::Approx(s3 / 6));
  CHECK(m.R == doctest::Approx(s3 / 3));
  CHECK(m.R == doctest::Approx(2 * m.r));
  CHECK(m.r_a == doctest::Approx(s3 / 2));
  CHECK(m.R < 2 * m.r_a);
  const TriangleMetrics n = metrics(0, 1);
  CHECK(n.a == doctest::Approx(std::sqrt(2.0)));
  CHECK(n.T == doctest::Approx(0.5));
  CHECK(n.s == doctest::Approx((2 + std::sqrt(2.0)) / 2));
  CHECK(n.R == doctest::Approx(std::sqrt(2.0) / 2));
  for (auto [x, y] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.0}})
    CHECK_THROWS_AS(metrics(x, y), InputError);
}

TEST_CASE("sample labels") {
  const double s3 = std::sqrt(3.0);
  CHECK(classify_sample(0.5, s3 / 2, Rational(2)) == Label::kIncircle);
  CHECK(classify_sample(0.5, s3 / 2, Rational(3)) == Label::kNone);
  // a real point of p2 on the line x = 1/2
  const Polynomial p2 = lk_test::printed_factor(1);
  const UPoly u = p2.substitute(0, Rational::make(1, 2)).to_upoly(1);
  const auto roots = isolate_real_roots(u, Rational::make(1, Integer(1) << 50));
  REQUIRE_FALSE(roots.empty());
  for (const auto& r : roots) {
    const Label l = classify_sample(0.5, r.box.mid().to_double(), Rational(2));
    CHECK((l == Label::kExA || l == Label::kExB || l == Label::kExC));
  }
}

TEST_CASE("formulations agree") {
  for (int k : {2, 3}) {
    CAPTURE(k);
    const Polynomial a = locus_polynomial(eliminate(euler_system({Rational(k), Formulation::kReduced})));
    const Polynomial b = locus_polynomial(eliminate(euler_system({Rational(k), Formulation::kFull})));
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("sampled classification of the loci") {
  {
    const Factorization f = factor_bivariate(lk_test::golden_locus());
    const Polynomial p2 = lk_test::printed_factor(1);
    bool seen = false;
    for (const auto& x : f.factors) {
      if (!(x.poly == p2)) continue;
      seen = true;
      auto c = classify_curve(x.poly, Rational(2));
      CHECK(c[Label::kIncircle] == 0);
      CHECK(c[Label::kExA] > 0);
      CHECK(c[Label::kExB] > 0);
      CHECK(c[Label::kExC] > 0);
    }
    CHECK(seen);
  }
  const Rational k19 = Rational::parse("19/10");
  const Polynomial L19 = locus_polynomial(eliminate(euler_system({k19, Formulation::kReduced})));
  CHECK(classify_curve(L19, k19)[Label::kIncircle] == 0);
  CHECK(classify_curve(L19, k19, BBox{}, 128, 7)[Label::kIncircle] == 0);
  const Polynomial L3 = locus_polynomial(eliminate(euler_system({Rational(3), Formulation::kReduced})));
  CHECK(classify_curve(L3, Rational(3))[Label::kIncircle] > 0);
}
