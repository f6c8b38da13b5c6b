#include "locuskit/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locuskit/errors.hpp"

namespace locuskit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, unsigned degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QuadExt UPoly::eval(const QuadExt& t) const {
  QuadExt acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + QuadExt(*it);
  return acc;
}

Interval UPoly::eval(const Interval& t) const {
  Interval acc = Interval::point(Rational(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + Interval::point(*it);
  return acc;
}

double UPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + it->to_double();
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  const Rational inv = Rational(1) / lead();
  return inv * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  Integer g = 0;
  for (const auto& c : c_) {
    const Integer n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale = Rational::make(l, g);
  if (lead().sign() < 0) scale = -scale;
  return scale * *this;
}

UPoly UPoly::shift(const Rational& s) const {
  // Horner in the shifted variable: acc = acc * (t + s) + c.
  UPoly acc;
  const UPoly lin(std::vector<Rational>{s, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + constant(*it);
  return acc;
}

UPoly UPoly::reflect() const {
  std::vector<Rational> v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& c : v) c = -c;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  if (s.is_zero()) return {};
  std::vector<Rational> v = a.c_;
  for (auto& c : v) c *= s;
  return UPoly(std::move(v));
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rational a = c.abs();
    if (i == 0) {
      os << a;
      continue;
    }
    if (!a.is_one()) os << a << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = Rational(1) / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = r[static_cast<std::size_t>(i)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

UBezout extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  const Rational inv = Rational(1) / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return f.monic();
  const UPoly g = gcd(f, f.derivative());
  return divmod(f, g).quotient.monic();
}

std::vector<UPoly> sturm_chain(const UPoly& f) {
  std::vector<UPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    UPoly r = divmod(a, b).remainder;
    // Positive rescaling keeps sign semantics while bounding coefficients.
    if (!r.is_zero()) {
      UPoly p = r.primitive();
      if ((p.lead().sign() > 0) != (r.lead().sign() > 0)) p = -p;
      r = -p;
    }
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

namespace {

int variations_at(const std::vector<UPoly>& chain, const Rational& t) {
  int v = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int count_roots(const std::vector<UPoly>& chain, const Rational& lo,
                const Rational& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

Rational root_bound(const UPoly& f) {
  // 1 + max |a_i / a_n|
  Rational m;
  for (int i = 0; i < f.degree(); ++i) {
    const Rational r = (f.coeff(static_cast<unsigned>(i)) / f.lead()).abs();
    if (r > m) m = r;
  }
  return m + Rational(1);
}

Interval interval_refine_root(const UPoly& f, const Interval& box) {
  const int slo = f.sign_at(box.lo);
  const int shi = f.sign_at(box.hi);
  if (slo * shi >= 0)
    throw InputError("interval_refine_root: no strict sign change on [" +
                         box.lo.str() + ", " + box.hi.str() + "]",
                     "E_NO_SIGN_CHANGE");
  const Rational mid = box.mid();
  const int sm = f.sign_at(mid);
  if (sm == 0) return Interval::point(mid);
  if (sm == slo) return {mid, box.hi};
  return {box.lo, mid};
}

RealRoot refine_root(const UPoly& f, RealRoot root, const Rational& max_width) {
  while (!root.exact() && root.box.width() > max_width)
    root.box = interval_refine_root(f, root.box);
  return root;
}

std::vector<RealRoot> isolate_real_roots(const UPoly& f,
                                         const Rational& max_width) {
  if (f.is_zero()) throw InputError("isolate_real_roots of zero polynomial");
  std::vector<RealRoot> out;
  if (f.degree() == 0) return out;
  const UPoly g = squarefree_part(f);
  const auto chain = sturm_chain(g);
  const Rational b = root_bound(g);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-b, b, count_roots(chain, -b, b)}};
  std::vector<Pending> singles;
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      singles.push_back(std::move(cur));
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / Rational(2);
    const int left = count_roots(chain, cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }

  for (auto& s : singles) {
    // Root lies in (lo, hi]; shrink until it is exact or strictly bracketed.
    for (;;) {
      if (g.sign_at(s.hi) == 0) {
        out.push_back({Interval::point(s.hi)});
        break;
      }
      if (g.sign_at(s.lo) != 0) {
        out.push_back(refine_root(g, {Interval(s.lo, s.hi)}, max_width));
        break;
      }
      const Rational mid = (s.lo + s.hi) / Rational(2);
      if (count_roots(chain, mid, s.hi) == 1)
        s.lo = mid;
      else
        s.hi = mid;
    }
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    return a.box.lo < b.box.lo;
  });
  return out;
}

}  // namespace locuskit
