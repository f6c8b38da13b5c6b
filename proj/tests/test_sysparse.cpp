#include "doctest.h"
#include "locuskit/sysparse.hpp"
#include "support.hpp"

using namespace locuskit;

TEST_CASE("parse expressions") {
  const auto ctx = make_context({"a", "b", "c", "r", "R", "x", "y"});
  const Polynomial abc = parse_poly("a*b*c*(a+b+c) - 4*y^2", ctx);
  CHECK(abc == parse_poly("a^2*b*c + a*b^2*c + a*b*c^2 - 4*y^2", ctx));
  const Polynomial dec = parse_poly("2.1*r - R", ctx);
  CHECK(dec == parse_poly("21/10*r - R", ctx));
  CHECK(lk_test::P("x^2 + y^2 - 1") ==
        lk_test::P("y^2 - 1 + x^2"));
  CHECK(lk_test::P("-(x - y)^2") == lk_test::P("-x^2 + 2*x*y - y^2"));
}

TEST_CASE("parse errors carry positions") {
  const auto ctx = make_context({"x", "y"});
  CHECK_THROWS_AS(parse_poly("x +* y", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("2x", ctx), ParseError);  // no implicit product
  CHECK_THROWS_AS(parse_poly("z", ctx), InputError);
  CHECK_THROWS_AS(parse_poly("x^99", ctx), ParseError);
  try {
    parse_poly("x + (y", ctx);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 6);
  }
}

TEST_CASE("parse systems") {
  const PolySystem s = parse_system("vars: a x y\neliminate: a\na^2 - x\na - y\n");
  CHECK(s.generators.size() == 2);
  CHECK(s.elim_vars == std::vector<std::string>{"a"});
  CHECK(s.retained_vars() == std::vector<std::string>{"x", "y"});
  // comments, blank lines and CRLF
  const PolySystem t = parse_system("# c\r\nvars: a x y\r\n\r\neliminate: a\r\na^2 - x\r\na - y\r\n");
  CHECK(t == s);
  try {
    parse_system("vars: a x y\na^2 - x\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_system("vars: a x y\neliminate: q\na - x\n"), InputError);
  CHECK_THROWS_AS(parse_system("vars: x x\neliminate:\nx\n"), InputError);
}

TEST_CASE("serialize") {
  CHECK(serialize(lk_test::P("x^2 - y^2")) == "x^2 - y^2");
  CHECK(serialize(lk_test::P("0")) == "0");
  const Polynomial I = lk_test::golden_locus();
  CHECK(I.size() > 60);
  CHECK(lk_test::P(serialize(I)) == I);
  for (const char* k : {"2", "21/10"})
    for (auto f : {Formulation::kReduced, Formulation::kFull}) {
      const PolySystem sys = euler_system({Rational::parse(k), f});
      CHECK(parse_system(serialize(sys)) == sys);
    }
}
