#include "doctest.h"
#include "locuskit/sysparse.hpp"
#include "support.hpp"

using namespace locuskit;
using lk_test::P;

namespace {
std::vector<Polynomial> gb(std::vector<Polynomial> F, const MonomialOrder& o,
                           bool modular = false) {
  GroebnerOptions opts;
  opts.modular = modular;
  return buchberger(F, o, opts).polys;
}
}  // namespace

TEST_CASE("reduction") {
  const auto lex = MonomialOrder::lex();
  CHECK(reduce(P("x^2"), {P("x")}, lex).is_zero());
  CHECK(reduce(P("x^2 + y^2 - 1"), {P("x - y"), P("2*y^2 - 1")}, lex).is_zero());
  CHECK(reduce(P("y"), {P("x")}, lex) == P("y"));
}

TEST_CASE("buchberger small cases") {
  const auto lex = MonomialOrder::lex();
  for (bool modular : {false, true}) {
    CAPTURE(modular);
    CHECK(gb({P("x")}, lex, modular) == std::vector<Polynomial>{P("x")});
    const auto g = gb({P("x^2 + y^2 - 1"), P("x - y")}, lex, modular);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == P("2*y^2 - 1"));
    CHECK(g[1] == P("x - y"));
    CHECK(gb({P("x - y"), P("y - x")}, lex, modular) == std::vector<Polynomial>{P("x - y")});
    CHECK(gb({P("x^2 + 1"), P("x - 1")}, lex, modular) == std::vector<Polynomial>{P("1")});
  }
  CHECK(is_groebner_basis({P("x - y"), P("2*y^2 - 1")}, lex));
  CHECK_FALSE(is_groebner_basis({P("x^2 - y"), P("x*y - 1")}, MonomialOrder::degrevlex()));
}

TEST_CASE("budget exhaustion is reported") {
  GroebnerOptions opts;
  opts.max_pairs = 1;
  const PolySystem sys = euler_system({Rational(2), Formulation::kReduced});
  EliminationOptions eo;
  eo.groebner = opts;
  CHECK_THROWS_AS(eliminate(sys, eo), BudgetExhausted);
  GroebnerOptions poll;
  poll.poll = [](const GroebnerProgress& p) { return p.pairs_done >= 2; };
  eo.groebner = poll;
  try {
    eliminate(sys, eo);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == "E_CANCELLED");
  }
}

TEST_CASE("elimination") {
  const PolySystem s = parse_system("vars: a x y\neliminate: a\na^2 - x\na - y\n");
  const auto g = eliminate(s);
  REQUIRE(g.size() == 1);
  CHECK(g[0].str() == "y^2 - x");
  const PolySystem bis = parse_system(
      "vars: a b x y\neliminate: a b\na^2 - x^2 - y^2\nb^2 - (x - 1)^2 - y^2\na - b\n");
  CHECK(locus_polynomial(eliminate(bis)).str() == "2*x - 1");
  EliminationOptions lex;
  lex.use_lex = true;
  CHECK(locus_polynomial(eliminate(bis, lex)).str() == "2*x - 1");
}

TEST_CASE("locus polynomial") {
  const auto ctx = make_context({"x", "y"});
  CHECK(locus_polynomial({P("y^2 - x")}) == P("y^2 - x"));
  CHECK(locus_polynomial({P("(y^2 - x)^2"), P("(y^2 - x)*x")}) == P("y^2 - x"));
  try {
    locus_polynomial({P("3")});
    FAIL("no throw");
  } catch (const EmptyEliminationIdeal& e) {
    CHECK(e.kind() == DegenerateLocus::kEmpty);
    CHECK(e.code() == "E_EMPTY_LOCUS");
  }
  try {
    locus_polynomial({});
    FAIL("no throw");
  } catch (const EmptyEliminationIdeal& e) {
    CHECK(e.kind() == DegenerateLocus::kWholePlane);
  }
}

TEST_CASE("membership") {
  const auto dl = MonomialOrder::degrevlex();
  CHECK(membership(P("x^2 - y^2"), buchberger({P("x - y")}, dl)));
  CHECK_FALSE(membership(P("x"), buchberger({P("y")}, dl)));
}

TEST_CASE("euler k = 2 reproduces the printed factor product") {
  const PolySystem sys = euler_system({Rational(2), Formulation::kReduced});
  const Polynomial L = locus_polynomial(eliminate(sys));
  CHECK(L.str() + "\n" == lk_test::slurp(lk_test::data_path("euler_k2_locus.txt")));
  EliminationOptions mod;
  mod.groebner.modular = true;
  CHECK(locus_polynomial(eliminate(sys, mod)) == L);
}

TEST_CASE("euler locus lies in the full ideal") {
  const PolySystem full = euler_system({Rational(2), Formulation::kFull});
  const EliminationResult r = eliminate_full(full);
  const Polynomial L = lk_test::golden_locus();
  const Polynomial Lf = L.remap(r.basis_context, r.basis.order);
  CHECK(membership(Lf, r.basis));
  CHECK_FALSE(membership(P("x").remap(r.basis_context, r.basis.order), r.basis));
}

TEST_CASE("saturation removes nothing it should keep") {
  // t*y - 1 adjoined: the locus stays inside the unsaturated one
  const PolySystem sys = euler_system({Rational(2), Formulation::kReduced});
  EliminationOptions sat;
  sat.saturate_var = "y";
  const Polynomial S = locus_polynomial(eliminate(sys, sat));
  CHECK(divide_exact(lk_test::golden_locus(), S.remap(lk_test::golden_locus().context())));
}
