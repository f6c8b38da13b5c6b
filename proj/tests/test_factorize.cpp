#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace locuskit;
using lk_test::P;

namespace {
std::vector<std::string> factor_strings(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& x : f.factors) out.push_back(x.poly.str() + "^" + std::to_string(x.multiplicity));
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("gcd") {
  CHECK(gcd_poly(P("x^2 - y^2"), P("x - y")) == P("x - y"));
  CHECK(gcd_poly(P("x"), P("y")) == P("1"));
  CHECK(gcd_poly(P("6*x + 4"), P("0")) == P("3*x + 2"));
  const Polynomial p1 = lk_test::printed_factor(0), p2 = lk_test::printed_factor(1),
                   p3 = lk_test::printed_factor(2);
  CHECK(gcd_poly(p2 * p3, p2 * p1) == p2);
}

TEST_CASE("exact division") {
  CHECK(divide_exact(P("x^2 - y^2"), P("x + y")).value() == P("x - y"));
  CHECK_FALSE(divide_exact(P("x^2 + y^2"), P("x + y")).has_value());
}

TEST_CASE("squarefree decomposition") {
  CHECK(factor_strings(squarefree(P("x^2*y"))) == std::vector<std::string>{"x^2", "y^1"});
  CHECK(factor_strings(squarefree(P("x^2 + y^2"))) == std::vector<std::string>{"x^2 + y^2^1"});
  CHECK(factor_strings(squarefree(P("(x - y)^3*(x + y)"))) ==
        std::vector<std::string>{"x + y^1", "x - y^3"});
  CHECK(squarefree_part(P("(x - y)^3*(x + y)^2*3")) == P("x^2 - y^2"));
}

TEST_CASE("univariate factorization") {
  const auto ctx = make_context({"t"});
  const auto up = [](std::vector<Rational> c) { return UPoly(std::move(c)); };
  const Factorization a = factor_univariate(up({-1, 0, 1}), ctx, 0);
  CHECK(a.factors.size() == 2);
  CHECK(factor_univariate(up({1, 0, 1}), ctx, 0).factors.size() == 1);
  // t^4 - 10 t^2 + 1, the minimal polynomial of sqrt 2 + sqrt 3
  const Factorization m = factor_univariate(up({1, 0, -10, 0, 1}), ctx, 0);
  REQUIRE(m.factors.size() == 1);
  CHECK(m.factors[0].poly.total_degree() == 4);
  // Swinnerton-Dyer style trap for naive recombination: x^4 + 1 is
  // irreducible over Q though it splits mod every prime.
  CHECK(factor_univariate(up({1, 0, 0, 0, 1}), ctx, 0).factors.size() == 1);
  const auto f = factor_upoly(up({-6, 11, -6, 1}));  // (t-1)(t-2)(t-3)
  CHECK(f.size() == 3);
}

TEST_CASE("bivariate factorization") {
  CHECK(factor_strings(factor_bivariate(P("x^2 - y^2"))) ==
        std::vector<std::string>{"x + y^1", "x - y^1"});
  CHECK(factor_bivariate(P("x^2 + y^2")).factors.size() == 1);
  CHECK(factor_bivariate(P("x^3 - x^2 - y^2")).factors.size() == 1);
  const Factorization f = factor_bivariate(P("2*(x*y - 1)^2*(x + y^3)"));
  CHECK(f.expand(lk_test::P("x").context()) == P("2*(x*y - 1)^2*(x + y^3)"));
}

TEST_CASE("the degree-18 locus splits into the printed factors") {
  const Factorization f = factor_bivariate(lk_test::golden_locus());
  REQUIRE(f.factors.size() == 3);
  std::vector<std::string> got, want;
  for (const auto& x : f.factors) {
    CHECK(x.multiplicity == 1);
    got.push_back(x.poly.str());
  }
  for (int i = 0; i < 3; ++i) want.push_back(lk_test::printed_factor(i).str());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("factorization seeds agree") {
  const Polynomial f = P("(x^2 + y^2 - 1)*(x - 2*y + 3)*(x*y + 1)");
  const auto a = factor_strings(factor_bivariate(f));
  BivariateOptions o;
  o.seed = 5;
  CHECK(factor_strings(factor_bivariate(f, o)) == a);
  CHECK(a.size() == 3);
}
