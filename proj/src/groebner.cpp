#include "locuskit/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "locuskit/errors.hpp"
#include "locuskit/factorize.hpp"
#include "src/groebner_engine.hpp"

namespace locuskit {

namespace detail {

IPoly to_ipoly(const Polynomial& p, const MonomialOrder& order) {
  IPoly out;
  if (p.is_zero()) return out;
  const Polynomial q = p.normalize_integer_primitive().with_order(order);
  out.reserve(q.size());
  for (const auto& t : q.terms()) out.push_back({t.mono, t.coef.num()});
  return out;
}

Polynomial to_poly(const IPoly& p, const ContextPtr& ctx,
                   const MonomialOrder& order) {
  std::vector<Term> t;
  t.reserve(p.size());
  for (const auto& term : p) t.push_back({term.m, Rational(term.c)});
  return Polynomial::from_terms(ctx, std::move(t), order);
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

std::size_t max_bits(const IPoly& p) {
  std::size_t b = 0;
  for (const auto& t : p) b = std::max(b, mpz_sizeinbase(t.c.get_mpz_t(), 2));
  return b;
}

// p <- a*p - c*m*g (g's terms shifted by m); starting at index `from` of p,
// where p[from] is known to cancel against the lead of m*g.
void sub_mul(IPoly& p, std::size_t from, const Integer& a, const Integer& c,
             const Monomial& m, const IPoly& g, const MonomialOrder& order,
             IPoly& scratch) {
  scratch.clear();
  scratch.reserve(p.size() - from + g.size());
  std::size_t i = from + 1;  // p[from] cancels with the lead of m*g
  std::size_t j = 1;
  Integer tmp;
  while (i < p.size() || j < g.size()) {
    int cmp;
    Monomial gm;
    if (j < g.size()) gm = g[j].m * m;
    if (i == p.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = order.compare(p[i].m, gm);
    if (cmp > 0) {
      scratch.push_back({p[i].m, a * p[i].c});
      ++i;
    } else if (cmp < 0) {
      scratch.push_back({gm, -(c * g[j].c)});
      ++j;
    } else {
      tmp = a * p[i].c - c * g[j].c;
      if (tmp != 0) scratch.push_back({gm, tmp});
      ++i;
      ++j;
    }
  }
  p.resize(from);
  for (auto& t : p) t.c *= a;
  for (auto& t : scratch) p.push_back(std::move(t));
}

// Full (or top-only) reduction of p by basis elements `G`. Returns the
// multiplier `scale` such that scale * p_in - p_out lies in the ideal; the
// output is made primitive and `scale` adjusted accordingly.
Rational reduce_in_place(IPoly& p, const std::vector<const IPoly*>& G,
                         const MonomialOrder& order, bool full) {
  Rational scale(1);
  IPoly scratch;
  std::size_t pos = 0;  // terms before pos are irreducible (tail kept)
  unsigned steps = 0;
  while (pos < p.size()) {
    const IPoly* div = nullptr;
    for (const IPoly* g : G) {
      if ((*g)[0].m.divides(p[pos].m)) {
        div = g;
        break;
      }
    }
    if (div == nullptr) {
      if (!full) break;
      ++pos;
      continue;
    }
    const Integer& lc = (*div)[0].c;
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), lc.get_mpz_t(), p[pos].c.get_mpz_t());
    Integer a = lc / gg;
    Integer c = p[pos].c / gg;
    if (a < 0) {
      a = -a;
      c = -c;
    }
    const Monomial m = p[pos].m / (*div)[0].m;
    sub_mul(p, pos, a, c, m, *div, order, scratch);
    scale *= Rational(a);
    if (++steps % 8 == 0 || (a != 1 && steps % 2 == 0)) {
      Integer g = 0;
      for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
      }
      if (g > 1) {
        for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        scale /= Rational(g);
      }
    }
  }
  if (!p.empty()) {
    Integer g = 0;
    for (const auto& t : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (p.front().c < 0) g = -g;
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    scale /= Rational(g);
  }
  return scale;
}

IPoly spoly(const IPoly& f, const IPoly& g, const MonomialOrder& order) {
  const Monomial l = Monomial::lcm(f[0].m, g[0].m);
  Integer gg;
  mpz_gcd(gg.get_mpz_t(), f[0].c.get_mpz_t(), g[0].c.get_mpz_t());
  const Integer a = g[0].c / gg;  // multiplies f
  const Integer c = f[0].c / gg;  // multiplies g
  const Monomial mf = l / f[0].m;
  IPoly p;
  p.reserve(f.size());
  for (const auto& t : f) p.push_back({t.m * mf, t.c});
  IPoly scratch;
  sub_mul(p, 0, a, c, l / g[0].m, g, order, scratch);
  return p;
}

}  // namespace detail

using detail::IPoly;

GroebnerOptions GroebnerOptions::from_env() {
  GroebnerOptions o;
  if (const char* env = std::getenv("LOCUSKIT_BUDGET_PAIRS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) o.max_pairs = static_cast<std::size_t>(v);
  }
  return o;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G,
                  const MonomialOrder& order) {
  if (f.is_zero()) return f.with_order(order);
  std::vector<IPoly> gi;
  gi.reserve(G.size());
  for (const auto& g : G) {
    if (!same_context(g.context(), f.context()))
      throw InputError("reduce: divisor in a foreign context", "E_CONTEXT");
    if (!g.is_zero()) gi.push_back(detail::to_ipoly(g, order));
  }
  std::vector<const IPoly*> ptrs;
  for (const auto& g : gi) ptrs.push_back(&g);
  IPoly p = detail::to_ipoly(f, order);
  const Rational content = f.content();
  Rational scale = detail::reduce_in_place(p, ptrs, order, true);
  // content * primitive(f) = f; scale * primitive(f) == p (mod ideal), so
  // f == content / scale * p.
  return detail::to_poly(p, f.context(), order).scaled(content / scale);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& F,
                         const MonomialOrder& order,
                         const GroebnerOptions& opts) {
  if (F.empty()) throw InputError("buchberger: empty generator list");
  const ContextPtr ctx = F.front().context();
  std::vector<IPoly> input;
  for (const auto& f : F) {
    if (!same_context(f.context(), ctx))
      throw InputError("buchberger: generators in different contexts", "E_CONTEXT");
    if (f.is_zero()) throw InputError("buchberger: zero generator");
    input.push_back(detail::to_ipoly(f, order));
  }
  GroebnerBasis gb;
  gb.order = order;
  std::vector<IPoly> result;
  if (opts.modular) {
    result = detail::modular_groebner(input, order, opts, gb.stats);
  } else {
    detail::Engine<detail::IntegerRing> e({order, opts}, order, opts);
    result = e.run(std::move(input));
    gb.stats = e.stats;
  }
  for (const auto& p : result) gb.polys.push_back(detail::to_poly(p, ctx, order));
  return gb;
}

bool is_groebner_basis(const std::vector<Polynomial>& G,
                       const MonomialOrder& order) {
  std::vector<IPoly> gi;
  for (const auto& g : G)
    if (!g.is_zero()) gi.push_back(detail::to_ipoly(g, order));
  std::vector<const IPoly*> ptrs;
  for (const auto& g : gi) ptrs.push_back(&g);
  for (std::size_t i = 0; i < gi.size(); ++i)
    for (std::size_t j = i + 1; j < gi.size(); ++j) {
      if (gi[i][0].m.coprime(gi[j][0].m)) continue;
      IPoly s = detail::spoly(gi[i], gi[j], order);
      detail::reduce_in_place(s, ptrs, order, false);
      if (!s.empty()) return false;
    }
  return true;
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  if (gb.polys.empty()) return false;
  return reduce(f, gb.polys, gb.order).is_zero();
}

// Elimination ----------------------------------------------------------------

EmptyEliminationIdeal::EmptyEliminationIdeal(DegenerateLocus kind)
    : InputError(kind == DegenerateLocus::kEmpty
                     ? "empty elimination ideal: the locus is empty"
                     : "empty elimination ideal: the locus is the whole plane",
                 kind == DegenerateLocus::kEmpty ? "E_EMPTY_LOCUS"
                                                 : "E_WHOLE_PLANE"),
      kind_(kind) {}

EliminationResult eliminate_full(const PolySystem& sys,
                                 const EliminationOptions& opts) {
  sys.validate();
  std::vector<std::string> elim = sys.elim_vars;
  std::vector<Polynomial> gens = sys.generators;
  const std::vector<std::string> retained = sys.retained_vars();

  std::string aux;
  if (!opts.saturate_var.empty()) {
    sys.context->require(opts.saturate_var);
    aux = "_sat";
    while (sys.context->index_of(aux)) aux += "_";
    elim.insert(elim.begin(), aux);
  }

  std::vector<std::string> names = elim;
  names.insert(names.end(), retained.begin(), retained.end());
  const ContextPtr ectx = make_context(names);
  const MonomialOrder order =
      opts.use_lex ? MonomialOrder::lex()
                   : MonomialOrder::block(static_cast<unsigned>(elim.size()));

  std::vector<Polynomial> mapped;
  for (const auto& g : gens) mapped.push_back(g.remap(ectx, order));
  if (!aux.empty()) {
    // aux * v - 1 removes the components on which v vanishes.
    mapped.push_back((Polynomial::variable(ectx, aux) *
                          Polynomial::variable(ectx, opts.saturate_var) -
                      Polynomial::constant(ectx, Rational(1)))
                         .with_order(order));
  }

  EliminationResult res;
  res.basis = buchberger(mapped, order, opts.groebner);
  res.basis_context = ectx;
  res.retained_context = make_context(retained);
  for (const auto& g : res.basis.polys) {
    bool free = true;
    for (std::size_t v = 0; v < elim.size() && free; ++v)
      if (g.involves(v)) free = false;
    if (free) res.generators.push_back(g.remap(res.retained_context));
  }
  return res;
}

std::vector<Polynomial> eliminate(const PolySystem& sys,
                                  const EliminationOptions& opts) {
  return eliminate_full(sys, opts).generators;
}

Polynomial locus_polynomial(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) throw EmptyEliminationIdeal(DegenerateLocus::kWholePlane);
  for (const auto& g : nz)
    if (g.is_constant()) throw EmptyEliminationIdeal(DegenerateLocus::kEmpty);
  Polynomial g = nz.front();
  for (std::size_t i = 1; i < nz.size(); ++i) g = gcd_poly(g, nz[i]);
  if (g.is_constant()) throw EmptyEliminationIdeal(DegenerateLocus::kEmpty);
  return squarefree_part(g).normalize_integer_primitive();
}

}  // namespace locuskit
