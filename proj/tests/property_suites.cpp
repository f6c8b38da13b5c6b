#include "property_suites.hpp"

#include <cmath>
#include <random>

#include "locuskit/factorize.hpp"
#include "locuskit/groebner.hpp"
#include "locuskit/scenario.hpp"

using namespace locuskit;

namespace lk_test {

namespace {

Polynomial random_poly(const ContextPtr& ctx, std::mt19937& rng, unsigned max_deg,
                       unsigned terms, int coef) {
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  std::vector<Term> ts;
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m;
    unsigned left = e(rng);
    for (std::size_t v = 0; v < ctx->size() && left > 0; ++v) {
      std::uniform_int_distribution<unsigned> part(0, left);
      const unsigned d = v + 1 == ctx->size() ? left : part(rng);
      m.exp[v] = static_cast<std::uint16_t>(d);
      m.degree += d;
      left -= d;
    }
    int cv = c(rng);
    if (cv == 0) cv = 1;
    ts.push_back({m, Rational(cv)});
  }
  return Polynomial::from_terms(ctx, ts);
}

}  // namespace

SuiteResult groebner_suite(std::size_t systems, std::uint32_t seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  const auto ctx = make_context({"x", "y", "z"});
  const MonomialOrder orders[] = {MonomialOrder::degrevlex(), MonomialOrder::lex()};
  for (std::size_t s = 0; s < systems && res.ok; ++s) {
    std::vector<Polynomial> F;
    const unsigned n = 2 + static_cast<unsigned>(rng() % 2);
    for (unsigned i = 0; i < n; ++i) {
      Polynomial f = random_poly(ctx, rng, 2, 3, 4);
      if (f.is_zero()) f = Polynomial::variable(ctx, i % 3);
      F.push_back(f);
    }
    const MonomialOrder& order = orders[s % 2];
    try {
      const GroebnerBasis gb = buchberger(F, order);
      if (!is_groebner_basis(gb.polys, order)) {
        res.ok = false;
        res.detail = "system " + std::to_string(s) + ": S-polynomial criterion fails";
      }
      for (const auto& f : F)
        if (!reduce(f, gb.polys, order).is_zero()) {
          res.ok = false;
          res.detail = "system " + std::to_string(s) + ": input not in ideal";
        }
      GroebnerOptions mo;
      mo.modular = true;
      const GroebnerBasis gm = buchberger(F, order, mo);
      bool same = gm.polys.size() == gb.polys.size();
      for (std::size_t i = 0; same && i < gm.polys.size(); ++i) same = gm.polys[i] == gb.polys[i];
      if (!same) {
        res.ok = false;
        res.detail = "system " + std::to_string(s) + ": modular basis differs";
      }
    } catch (const Error& e) {
      res.ok = false;
      res.detail = "system " + std::to_string(s) + ": " + e.what();
    }
    ++res.cases;
  }
  return res;
}

SuiteResult factorization_suite(std::size_t polys, std::uint32_t seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  const auto ctx = make_context({"x", "y"});
  for (std::size_t s = 0; s < polys && res.ok; ++s) {
    Polynomial f = Polynomial::constant(ctx, Rational(1 + static_cast<int>(rng() % 3)));
    const unsigned nf = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned i = 0; i < nf; ++i) {
      Polynomial g = random_poly(ctx, rng, 3, 3, 5);
      if (g.is_constant()) g = g + Polynomial::variable(ctx, i % 2);
      f = f * g.pow(1 + static_cast<unsigned>(rng() % 3 == 0));
    }
    try {
      const Factorization fz = factor_bivariate(f);
      if (!(fz.expand(ctx) == f)) {
        res.ok = false;
        res.detail = "poly " + std::to_string(s) + ": product differs from input";
      }
      for (const auto& fac : fz.factors)
        if (fac.poly.is_constant() || !divide_exact(f, fac.poly)) {
          res.ok = false;
          res.detail = "poly " + std::to_string(s) + ": bad factor " + fac.poly.str();
        }
    } catch (const Error& e) {
      res.ok = false;
      res.detail = "poly " + std::to_string(s) + ": " + e.what();
    }
    ++res.cases;
  }
  return res;
}

SuiteResult triangle_suite(std::size_t samples, std::uint32_t seed) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-3, 4), uy(-3, 3);
  bool witness = false;
  const auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
  while (res.cases < samples) {
    const double x = ux(rng), y = uy(rng);
    if (std::abs(y) < 1e-3) continue;
    const TriangleMetrics m = metrics(x, y);
    ++res.cases;
    std::string bad;
    if (rel(m.r * m.s, m.T) > 1e-10) bad = "r*s != T";
    if (rel(4 * m.R * m.T, m.a * m.b * m.c) > 1e-10) bad = "4RT != abc";
    if (rel(m.r_a + m.r_b + m.r_c - m.r, 4 * m.R) > 1e-10) bad = "r_a + r_b + r_c - r != 4R";
    if (m.R < 2 * m.r - 1e-12) bad = "R < 2r";
    if (!bad.empty()) {
      res.ok = false;
      res.detail = bad + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
      return res;
    }
    witness = witness || m.R < 2 * m.r_a;
  }
  if (!witness) {
    res.ok = false;
    res.detail = "no sample with R < 2 r_a";
  }
  return res;
}

}  // namespace lk_test
