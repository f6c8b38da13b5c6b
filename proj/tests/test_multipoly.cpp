#include "doctest.h"
#include "support.hpp"

using namespace locuskit;
using lk_test::P;

TEST_CASE("ring operations") {
  CHECK(P("(x + y)*(x - y)") == P("x^2 - y^2"));
  CHECK(P("x^3 - 2*y") + P("0") == P("x^3 - 2*y"));
  CHECK((P("x - y") - P("x - y")).is_zero());
  CHECK(P("(x + 1)^3") == P("x^3 + 3*x^2 + 3*x + 1"));
}

TEST_CASE("printed factors multiply to the golden locus") {
  const Polynomial prod = lk_test::printed_factor(0) * lk_test::printed_factor(1) *
                          lk_test::printed_factor(2);
  CHECK(prod == lk_test::golden_locus());
  CHECK(prod.total_degree() == 18);
}

TEST_CASE("partial derivatives") {
  const Polynomial c = P("x^3 - x^2 - y^2");
  CHECK(c.derive("x") == P("3*x^2 - 2*x"));
  CHECK(c.derive("y") == P("-2*y"));
  CHECK(P("5").derive("x").is_zero());
  CHECK_THROWS_AS(c.derive("z"), InputError);
}

TEST_CASE("exact evaluation") {
  const Polynomial I = lk_test::golden_locus();
  CHECK(lk_test::at(I, lk_test::equilateral(1)).is_zero());
  CHECK(lk_test::at(I, lk_test::equilateral(-1)).is_zero());
  const Rational o[2] = {0, 0};
  CHECK(P("x^3 - x^2 - y^2").eval(std::span<const Rational>(o, 2)).is_zero());
  const Rational h[2] = {Rational::make(1, 2), 3};
  CHECK(P("x*y + 1").eval(std::span<const Rational>(h, 2)) == Rational::make(5, 2));
}

TEST_CASE("the expanded polynomial as printed is inconsistent with its factors") {
  // Same terms as the product of the printed factors except x^18.
  const Polynomial printed = P(lk_test::slurp(lk_test::data_path("euler_k2_printed.txt")));
  const Polynomial diff = lk_test::golden_locus() - printed;
  CHECK(diff == P("62*x^18"));
  CHECK_FALSE(lk_test::at(printed, lk_test::equilateral(1)).is_zero());
}

TEST_CASE("integer primitive normalization") {
  CHECK(P("1/2*x + 1/3*y").normalize_integer_primitive() == P("3*x + 2*y"));
  CHECK(P("-2*x^2 + 4").normalize_integer_primitive() == P("x^2 - 2"));  // coprime wins over the kept 2
  const Polynomial f = P("3*x^2 - 5*x*y + 7");
  CHECK(f.normalize_integer_primitive() == f);
  CHECK(P("-6*x + 4").content() == Rational(-2));
  CHECK_THROWS_AS(P("0").normalize_integer_primitive(), InputError);
}

TEST_CASE("mixed contexts are rejected") {
  const auto other = make_context({"u", "v"});
  const Polynomial u = Polynomial::variable(other, "u");
  CHECK_THROWS_AS(P("x") + u, InputError);
}

TEST_CASE("monomial orders") {
  const auto ctx = make_context({"x", "y"});
  Monomial x2 = Monomial::var(0, 2), xy3 = Monomial::var(0) * Monomial::var(1, 3);
  CHECK(MonomialOrder::lex().compare(x2, xy3) > 0);
  CHECK(MonomialOrder::degrevlex().compare(x2, xy3) < 0);
  // block(1): anything with x beats anything without
  CHECK(MonomialOrder::block(1).compare(Monomial::var(0), Monomial::var(1, 5)) > 0);
}
