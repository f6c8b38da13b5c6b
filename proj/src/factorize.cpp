#include "locuskit/factorize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "src/modp.hpp"

namespace locuskit {

namespace {

Polynomial one_like(const Polynomial& f) {
  return Polynomial::constant(f.context(), Rational(1));
}

Polynomial normalized(const Polynomial& f) {
  return f.is_zero() ? f : f.normalize_integer_primitive();
}

bool factor_less(const Polynomial& a, const Polynomial& b) {
  if (a.total_degree() != b.total_degree())
    return a.total_degree() < b.total_degree();
  return a.str() < b.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Factorization helpers

Polynomial Factorization::expand(const ContextPtr& ctx) const {
  Polynomial acc = Polynomial::constant(ctx, content);
  for (const auto& f : factors) acc = acc * f.poly.pow(f.multiplicity);
  return acc;
}

std::string Factorization::to_json() const {
  nlohmann::ordered_json j;
  j["content"] = content.str();
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : factors)
    j["factors"].push_back({{"poly", f.poly.str()}, {"multiplicity", f.multiplicity}});
  return j.dump();
}

// ---------------------------------------------------------------------------
// Exact division and gcd

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  if (!same_context(f.context(), g.context()))
    throw InputError("divide_exact: different contexts", "E_CONTEXT");
  const MonomialOrder order = MonomialOrder::degrevlex();
  Polynomial r = f.with_order(order);
  const Polynomial d = g.with_order(order);
  std::vector<Term> q;
  while (!r.is_zero()) {
    if (!d.lead_mono().divides(r.lead_mono())) return std::nullopt;
    const Monomial m = r.lead_mono() / d.lead_mono();
    const Rational c = r.lead_coef() / d.lead_coef();
    r = r - d.mul_term(m, c);
    q.push_back({m, c});
  }
  return Polynomial::from_terms(f.context(), std::move(q), order);
}

namespace {

Polynomial must_divide(const Polynomial& f, const Polynomial& g) {
  auto q = divide_exact(f, g);
  if (!q) throw InvariantViolation("expected exact polynomial division");
  return *q;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

Polynomial content_in(const Polynomial& f, std::size_t v) {
  Polynomial c(f.context());
  for (const auto& coef : coefficients_in(f, v)) {
    if (coef.is_zero()) continue;
    c = c.is_zero() ? normalized(coef) : gcd_rec(c, coef);
    if (c.is_constant()) return one_like(f);
  }
  return c;
}

Polynomial lc_in(const std::vector<Polynomial>& c) { return c.back(); }

void trim_coeffs(std::vector<Polynomial>& c) {
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

std::vector<Polynomial> prem(std::vector<Polynomial> a,
                             const std::vector<Polynomial>& b) {
  const std::size_t db = b.size() - 1;
  const Polynomial& lb = b.back();
  if (a.size() < b.size()) return a;
  for (std::size_t i = a.size() - 1;; --i) {
    const Polynomial top = a[i];
    for (auto& c : a) c = c * lb;
    if (!top.is_zero())
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = a[i - db + j] - top * b[j];
    a.pop_back();
    if (i == db) break;
  }
  trim_coeffs(a);
  return a;
}

bool coeffs_zero(const std::vector<Polynomial>& c) {
  return c.size() == 1 && c[0].is_zero();
}

// Last nonzero element of the subresultant PRS of a, b in variable v.
Polynomial subresultant_gcd(const Polynomial& f, const Polynomial& g,
                            std::size_t v) {
  auto a = coefficients_in(f, v);
  auto b = coefficients_in(g, v);
  if (a.size() < b.size()) std::swap(a, b);
  const ContextPtr& ctx = f.context();
  Polynomial gg = Polynomial::constant(ctx, Rational(1));
  Polynomial h = gg;
  for (;;) {
    const std::size_t delta = a.size() - b.size();
    auto r = prem(a, b);
    if (coeffs_zero(r)) return from_coefficients(b, v, ctx);
    if (r.size() == 1) return from_coefficients(r, v, ctx);
    a = std::move(b);
    const Polynomial div = gg * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = c.is_zero() ? c : must_divide(c, div);
    b = std::move(r);
    gg = lc_in(a);
    if (delta == 0) {
      // h unchanged
    } else {
      h = must_divide(gg.pow(static_cast<unsigned>(delta)),
                      h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return normalized(g);
  if (g.is_zero()) return normalized(f);
  if (f.is_constant() || g.is_constant()) return one_like(f);
  std::size_t v = kMaxVars;
  for (std::size_t i = 0; i < f.context()->size(); ++i)
    if (f.involves(i) || g.involves(i)) {
      v = i;
      break;
    }
  if (!f.involves(v)) return gcd_rec(f, content_in(g, v));
  if (!g.involves(v)) return gcd_rec(content_in(f, v), g);
  const Polynomial cf = content_in(f, v);
  const Polynomial cg = content_in(g, v);
  const Polynomial c = gcd_rec(cf, cg);
  const Polynomial pf = must_divide(f, cf);
  const Polynomial pg = must_divide(g, cg);
  const Polynomial h = subresultant_gcd(pf.normalize_integer_primitive(),
                                        pg.normalize_integer_primitive(), v);
  if (!h.involves(v)) return c;
  const Polynomial ph = must_divide(h, content_in(h, v));
  return (c * ph).normalize_integer_primitive();
}

}  // namespace

Polynomial gcd_poly(const Polynomial& f, const Polynomial& g) {
  if (!same_context(f.context(), g.context()))
    throw InputError("gcd_poly: different contexts", "E_CONTEXT");
  if (f.is_zero() && g.is_zero()) return f;
  return gcd_rec(f, g);
}

// ---------------------------------------------------------------------------
// Squarefree decomposition

namespace {

void sqf_rec(const Polynomial& f, std::map<unsigned, Polynomial>& parts) {
  if (f.is_constant()) return;
  std::size_t v = 0;
  while (!f.involves(v)) ++v;
  const Polynomial c = content_in(f, v);
  sqf_rec(c, parts);
  const Polynomial p = must_divide(f, c);
  if (!p.involves(v)) return;

  auto add = [&](unsigned m, const Polynomial& q) {
    if (q.is_constant()) return;
    auto it = parts.find(m);
    if (it == parts.end())
      parts.emplace(m, normalized(q));
    else
      it->second = normalized(it->second * q);
  };

  // Yun's algorithm in variable v.
  const Polynomial dp = p.derive(v);
  const Polynomial a = gcd_rec(p, dp);
  Polynomial b = must_divide(p, a);
  Polynomial cc = must_divide(dp, a);
  Polynomial d = cc - b.derive(v);
  unsigned i = 1;
  while (!b.is_constant()) {
    const Polynomial ai = gcd_rec(b, d);
    add(i, ai);
    b = must_divide(b, ai);
    cc = must_divide(d, ai);
    d = cc - b.derive(v);
    ++i;
  }
}

}  // namespace

Factorization squarefree(const Polynomial& f) {
  if (f.is_zero()) throw InputError("squarefree of the zero polynomial");
  std::map<unsigned, Polynomial> parts;
  sqf_rec(f.normalize_integer_primitive(), parts);
  Factorization out;
  for (auto& [m, p] : parts) out.factors.push_back({p, m});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
  const Polynomial prod = Factorization{Rational(1), out.factors}.expand(f.context());
  out.content = must_divide(f, prod).lead_coef();
  return out;
}

Polynomial squarefree_part(const Polynomial& f) {
  const Factorization s = squarefree(f);
  Polynomial acc = one_like(f);
  for (const auto& p : s.factors) acc = acc * p.poly;
  return acc.normalize_integer_primitive();
}

// ---------------------------------------------------------------------------
// Univariate factorization over Z (Zassenhaus)

namespace {

using ZPoly = std::vector<Integer>;  // ascending

ZPoly to_zpoly(const UPoly& f) {
  const UPoly p = f.primitive();
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.num());
  return z;
}

UPoly from_zpoly(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v);
  return UPoly(std::move(c));
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly zmod(const ZPoly& a, const Integer& m) {
  ZPoly r = a;
  for (auto& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

ZPoly zsym(const ZPoly& a, const Integer& m) {
  ZPoly r = zmod(a, m);
  const Integer half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  ztrim(r);
  return r;
}

modp::Poly to_modp(const ZPoly& a, modp::u64 p) {
  modp::Poly r;
  for (const auto& c : a) r.push_back(modp::reduce(c, p));
  modp::trim(r);
  return r;
}

ZPoly from_modp(const modp::Poly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Linear Hensel lifting of f = g*h (mod p) to modulus p^k.
// g0 monic mod p; returns (g monic, h with lc(h) = lc(f)) modulo p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const modp::Poly& g0,
                                    const modp::Poly& h0, modp::u64 p,
                                    unsigned k) {
  modp::Poly gg, s, t;
  modp::ext_gcd(g0, h0, p, gg, s, t);
  if (modp::deg(gg) != 0) throw InvariantViolation("Hensel factors not coprime");
  ZPoly g = from_modp(g0);
  ZPoly h = from_modp(h0);
  h.back() = f.back();
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly e = zsub(f, zmul(g, h));
    for (auto& c : e) {
      if (mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t()) == 0)
        throw InvariantViolation("Hensel lifting lost exactness");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    }
    const modp::Poly ep = to_modp(e, p);
    const modp::Poly dg = modp::rem(modp::mul(t, ep, p), g0, p);
    modp::Poly dh, r;
    modp::divmod(modp::sub(ep, modp::mul(dg, h0, p), p), g0, p, dh, r);
    ZPoly zdg = from_modp(dg), zdh = from_modp(dh);
    g.resize(std::max(g.size(), zdg.size()), Integer(0));
    h.resize(std::max(h.size(), zdh.size()), Integer(0));
    for (std::size_t i = 0; i < zdg.size(); ++i) g[i] += zdg[i] * pj;
    for (std::size_t i = 0; i < zdh.size(); ++i) h[i] += zdh[i] * pj;
    pj *= p;
  }
  return {zmod(g, pj), zmod(h, pj)};
}

// Lift f = lc * prod(u_i) (mod p) to monic factors modulo p^k.
std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<modp::Poly>& u,
                                modp::u64 p, unsigned k) {
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, k);
  if (u.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    return {zmod(r, m)};
  }
  modp::Poly rest{modp::reduce(f.back(), p)};
  for (std::size_t i = 1; i < u.size(); ++i) rest = modp::mul(rest, u[i], p);
  auto [g, h] = hensel_pair(f, u[0], rest, p, k);
  std::vector<modp::Poly> tail(u.begin() + 1, u.end());
  std::vector<ZPoly> out{g};
  for (auto& z : hensel_multi(h, tail, p, k)) out.push_back(std::move(z));
  return out;
}

std::optional<ZPoly> zdivide(const ZPoly& f, const ZPoly& g) {
  auto [q, r] = divmod(from_zpoly(f), from_zpoly(g));
  if (!r.is_zero()) return std::nullopt;
  ZPoly out;
  for (const auto& c : q.coeffs()) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.num());
  }
  return out;
}

ZPoly zprimitive(const ZPoly& a) { return to_zpoly(from_zpoly(a)); }

// f: primitive, squarefree, degree >= 1, positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {f};

  // Pick among the first few good primes the one with fewest modular factors.
  modp::u64 best_p = 0;
  std::vector<modp::Poly> best;
  int good = 0;
  for (modp::u64 p = 3; good < 5 && p < 100000; p += 2) {
    if (!modp::is_prime(p)) continue;
    if (modp::reduce(f.back(), p) == 0) continue;
    const modp::Poly fp = to_modp(f, p);
    if (modp::deg(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
    ++good;
    auto fac = modp::factor_squarefree(fp, p, 0x5eed + p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw InvariantViolation("no suitable prime for factorization");

  // Coefficient bound for factors times the leading coefficient.
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = maxc * (n + 1);
  bound <<= static_cast<unsigned>(n + 1);
  bound *= abs(f.back());
  bound *= 2;
  unsigned k = 1;
  Integer m = best_p;
  while (m <= bound) {
    m *= best_p;
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_multi(f, best, best_p, k);
  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = zmod(zmul(cand, lifted[i]), m);
      cand = zprimitive(zsym(cand, m));
      if (auto q = zdivide(rest, cand)) {
        found.push_back(cand);
        rest = *q;
        if (rest.back() < 0)
          for (auto& c : rest) c = -c;
        for (std::size_t i = s; i-- > 0;)
          lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        hit = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.size() > 1) found.push_back(rest);
  return found;
}

}  // namespace

std::vector<std::pair<UPoly, unsigned>> factor_upoly(const UPoly& f) {
  if (f.degree() < 1) return {};
  // Univariate Yun.
  std::vector<std::pair<UPoly, unsigned>> parts;
  const UPoly fp = f.primitive();
  const UPoly d = fp.derivative();
  const UPoly a = gcd(fp, d);
  UPoly b = divmod(fp, a).quotient;
  UPoly c = divmod(d, a).quotient;
  UPoly dd = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const UPoly ai = gcd(b, dd);
    if (ai.degree() > 0) parts.push_back({ai.primitive(), i});
    b = divmod(b, ai).quotient;
    c = divmod(dd, ai).quotient;
    dd = c - b.derivative();
    ++i;
  }
  std::vector<std::pair<UPoly, unsigned>> out;
  for (const auto& [p, m] : parts)
    for (const auto& z : zassenhaus(to_zpoly(p))) out.push_back({from_zpoly(z).primitive(), m});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.str() < y.first.str();
  });
  return out;
}

Factorization factor_univariate(const UPoly& f, const ContextPtr& ctx,
                                std::size_t var) {
  if (f.degree() < 1) throw InputError("factor_univariate needs degree >= 1");
  Factorization out;
  for (const auto& [p, m] : factor_upoly(f))
    out.factors.push_back({Polynomial::from_upoly(ctx, var, p), m});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
  Rational lead(1);
  for (const auto& fa : out.factors)
    lead *= fa.poly.lead_coef().pow(fa.multiplicity);
  out.content = f.lead() / lead;
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate factorization

namespace {

using Series = std::vector<UPoly>;  // coefficient of Y^j is a polynomial in x

// Lift monic factors of F mod Y to monic factors modulo Y^prec.
std::vector<Series> lift_series(const Series& F, const std::vector<UPoly>& m,
                                std::size_t prec) {
  if (m.size() == 1) return {F};
  UPoly b0 = UPoly::constant(1);
  for (std::size_t i = 1; i < m.size(); ++i) b0 = b0 * m[i];
  const UPoly& a0 = m[0];
  const UBezout bz = extended_gcd(a0, b0);
  if (bz.g.degree() != 0) throw InvariantViolation("lifting factors not coprime");
  Series A(prec), B(prec);
  A[0] = a0;
  B[0] = b0;
  for (std::size_t j = 1; j < prec; ++j) {
    UPoly e = j < F.size() ? F[j] : UPoly();
    for (std::size_t i = 0; i <= j; ++i) e = e - A[i] * B[j - i];
    if (e.is_zero()) continue;
    const UPoly da = divmod(bz.t * e, a0).remainder;
    const UPoly db = divmod(e - da * b0, a0).quotient;
    A[j] = da;
    B[j] = db;
  }
  std::vector<UPoly> tail(m.begin() + 1, m.end());
  std::vector<Series> out{A};
  for (auto& s : lift_series(B, tail, prec)) out.push_back(std::move(s));
  return out;
}

Series series_mul(const Series& a, const Series& b, std::size_t prec) {
  Series r(prec);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < prec; ++j)
      if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

// Coefficients of g in powers of Y = (y - y0), each a polynomial in x.
Series shifted_series(const Polynomial& g, std::size_t xv, std::size_t yv,
                      const Rational& y0) {
  const auto cx = coefficients_in(g, xv);  // polys in y
  const unsigned dy = g.degree_in(yv);
  Series s(dy + 1);
  for (std::size_t i = 0; i < cx.size(); ++i) {
    const UPoly cy = cx[i].to_upoly(yv).shift(y0);  // c(Y + y0)
    for (int j = 0; j <= cy.degree(); ++j)
      s[static_cast<std::size_t>(j)] =
          s[static_cast<std::size_t>(j)] +
          UPoly::monomial(cy.coeff(static_cast<unsigned>(j)), static_cast<unsigned>(i));
  }
  return s;
}

Polynomial series_to_poly(const Series& s, const ContextPtr& ctx, std::size_t xv,
                          std::size_t yv, const Rational& y0) {
  const Polynomial shift = Polynomial::variable(ctx, yv) - Polynomial::constant(ctx, y0);
  Polynomial acc(ctx);
  Polynomial pw = Polynomial::constant(ctx, Rational(1));
  for (const auto& c : s) {
    if (!c.is_zero()) acc = acc + Polynomial::from_upoly(ctx, xv, c) * pw;
    pw = pw * shift;
  }
  return acc;
}

std::vector<Polynomial> factor_sqfree_bivariate(Polynomial g, std::size_t xv,
                                                std::size_t yv,
                                                const BivariateOptions& opts) {
  const ContextPtr& ctx = g.context();
  if (g.degree_in(yv) == 0) {
    std::vector<Polynomial> out;
    for (const auto& [p, m] : factor_upoly(g.to_upoly(xv)))
      out.push_back(Polynomial::from_upoly(ctx, xv, p));
    return out;
  }
  if (g.degree_in(xv) == 1) return {g};

  const unsigned dx = g.degree_in(xv);
  auto lc_of = [&](const Polynomial& h) {
    return coefficients_in(h, xv).back().to_upoly(yv);
  };

  Rational y0;
  UPoly image;
  bool lucky = false;
  for (unsigned a = 0; a < opts.max_attempts; ++a) {
    const unsigned k = a + opts.seed;
    const long mag = static_cast<long>(k / 2 + 1);
    y0 = Rational(k % 2 == 0 ? mag : -mag);
    if (lc_of(g).eval(y0).is_zero()) continue;
    image = g.substitute(yv, y0).to_upoly(xv);
    if (image.degree() != static_cast<int>(dx)) continue;
    if (gcd(image, image.derivative()).degree() != 0) continue;
    lucky = true;
    break;
  }
  if (!lucky)
    throw LuckyValueNotFound("no lucky specialization value found within " +
                             std::to_string(opts.max_attempts) + " attempts");

  const auto img_factors = factor_upoly(image);
  if (img_factors.size() == 1) return {g};

  std::vector<UPoly> monic_factors;
  for (const auto& [p, m] : img_factors) monic_factors.push_back(p.monic());

  const UPoly lc_shift = lc_of(g).shift(y0);
  const std::size_t prec =
      g.degree_in(yv) + static_cast<std::size_t>(std::max(0, lc_shift.degree())) + 1;

  // F = G / lc(G) as a power series in Y, monic in x.
  const Series G = shifted_series(g, xv, yv, y0);
  std::vector<Rational> inv(prec);
  inv[0] = Rational(1) / lc_shift.coeff(0);
  for (std::size_t j = 1; j < prec; ++j) {
    Rational s;
    for (std::size_t i = 1; i <= j; ++i) s += lc_shift.coeff(static_cast<unsigned>(i)) * inv[j - i];
    inv[j] = -s * inv[0];
  }
  Series F(prec);
  for (std::size_t j = 0; j < prec; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (j - i < G.size() && !inv[i].is_zero()) F[j] = F[j] + inv[i] * G[j - i];

  std::vector<Series> lifted = lift_series(F, monic_factors, prec);

  std::vector<Polynomial> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      const UPoly ell = lc_of(g).shift(y0);
      Series cand(prec);
      for (int j = 0; j <= ell.degree() && static_cast<std::size_t>(j) < prec; ++j)
        cand[static_cast<std::size_t>(j)] = UPoly::constant(ell.coeff(static_cast<unsigned>(j)));
      for (auto i : idx) cand = series_mul(cand, lifted[i], prec);
      Polynomial h = series_to_poly(cand, ctx, xv, yv, y0);
      if (!h.is_zero() && h.involves(xv)) {
        h = must_divide(h, content_in(h, xv)).normalize_integer_primitive();
        if (auto q = divide_exact(g, h)) {
          found.push_back(h);
          g = *q;
          for (std::size_t i = s; i-- > 0;)
            lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
          hit = true;
          break;
        }
      }
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (!g.is_constant()) found.push_back(g.normalize_integer_primitive());
  return found;
}

}  // namespace

Factorization factor_bivariate(const Polynomial& f, const BivariateOptions& opts) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial", "E_ZERO_POLY");
  const auto supp = f.support();
  if (supp.size() > 2)
    throw InputError("factor_bivariate: polynomial involves more than two variables");
  const ContextPtr& ctx = f.context();
  Factorization out;
  if (supp.empty()) {
    out.content = f.is_zero() ? Rational(0) : f.lead_coef();
    return out;
  }
  if (supp.size() == 1) {
    auto u = factor_univariate(f.to_upoly(supp[0]), ctx, supp[0]);
    return u;
  }
  const std::size_t xv = supp[0];
  const std::size_t yv = supp[1];

  std::vector<Factor> factors;
  const Polynomial prim = f.normalize_integer_primitive();
  const Polynomial cont = content_in(prim, xv);  // polynomial in y
  if (!cont.is_constant())
    for (const auto& [p, m] : factor_upoly(cont.to_upoly(yv)))
      factors.push_back({Polynomial::from_upoly(ctx, yv, p), m});
  const Polynomial pp = must_divide(prim, cont);
  const Factorization sq = squarefree(pp);
  for (const auto& part : sq.factors)
    for (auto& irr : factor_sqfree_bivariate(part.poly, xv, yv, opts))
      factors.push_back({irr.normalize_integer_primitive(), part.multiplicity});

  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
  out.factors = std::move(factors);
  const Polynomial prod = Factorization{Rational(1), out.factors}.expand(ctx);
  out.content = must_divide(f, prod).lead_coef();
  return out;
}

}  // namespace locuskit
