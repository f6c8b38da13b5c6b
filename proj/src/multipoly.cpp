#include "locuskit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "locuskit/errors.hpp"

namespace locuskit {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.context(), b.context()))
    throw InputError("polynomials live in different variable contexts",
                     "E_CONTEXT");
}

}  // namespace

VariableContext::VariableContext(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw InputError("too many variables (max " + std::to_string(kMaxVars) +
                     ")");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i]))
      throw InputError("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw InputError("duplicate variable '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VariableContext::index_of(
    const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableContext::require(const std::string& name) const {
  if (auto i = index_of(name)) return *i;
  throw InputError("unknown variable '" + name + "'", "E_UNKNOWN_VARIABLE");
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || *a == *b;
}

// ---------------------------------------------------------------------------

Monomial Monomial::var(std::size_t index, unsigned power) {
  Monomial m;
  m.exp[index] = static_cast<std::uint16_t>(power);
  m.degree = power;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
  m.degree = degree - o.degree;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{exp[i]} + o.exp[i];
    if (e > 0xFFFFu) throw InvariantViolation("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = degree + o.degree;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::min(a.exp[i], b.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] != 0 && o.exp[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

int cmp_degrevlex_range(const Monomial& a, const Monomial& b, std::size_t from,
                        std::size_t to) {
  unsigned da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = to; i-- > from;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kLex:
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    case Kind::kDegRevLex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      for (std::size_t i = kMaxVars; i-- > 0;)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
      return 0;
    case Kind::kBlock: {
      if (int c = cmp_degrevlex_range(a, b, 0, split_); c != 0) return c;
      return cmp_degrevlex_range(a, b, split_, kMaxVars);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::kLex:
      return "lex";
    case Kind::kDegRevLex:
      return "degrevlex";
    case Kind::kBlock:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(ContextPtr ctx, MonomialOrder order)
    : ctx_(std::move(ctx)), order_(order) {}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial p(std::move(ctx), order);
  p.terms_ = std::move(terms);
  p.sort_and_merge();
  return p;
}

void Polynomial::sort_and_merge() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order_.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, const std::string& name) {
  const std::size_t i = ctx->require(name);
  return variable(std::move(ctx), i);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  Polynomial p(std::move(ctx));
  p.terms_.push_back({Monomial::var(index), Rational(1)});
  return p;
}

Polynomial Polynomial::from_upoly(ContextPtr ctx, std::size_t index,
                                  const UPoly& u) {
  std::vector<Term> t;
  for (int i = u.degree(); i >= 0; --i) {
    const Rational& c = u.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero())
      t.push_back({Monomial::var(index, static_cast<unsigned>(i)), c});
  }
  return from_terms(std::move(ctx), std::move(t));
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.degree);
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < ctx_->size(); ++v)
    if (involves(v)) s.push_back(v);
  return s;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p(ctx_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  return p;
}

Polynomial Polynomial::remap(const ContextPtr& ctx, MonomialOrder order) const {
  std::vector<std::optional<std::size_t>> map(ctx_->size());
  for (std::size_t v = 0; v < ctx_->size(); ++v) map[v] = ctx->index_of(ctx_->name(v));
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < ctx_->size(); ++v) {
      if (term.mono.exp[v] == 0) continue;
      if (!map[v])
        throw InputError("variable '" + ctx_->name(v) +
                             "' is not present in the target context",
                         "E_CONTEXT");
      m.exp[*map[v]] = term.mono.exp[v];
    }
    m.degree = term.mono.degree;
    t.push_back({m, term.coef});
  }
  return from_terms(ctx, std::move(t), order);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial Polynomial::scaled(const Rational& s) const {
  if (s.is_zero()) return Polynomial(ctx_, order_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef *= s;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial(ctx_, order_);
  Polynomial p(ctx_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ctx_, Rational(1)).with_order(order_);
  Polynomial b = *this;
  while (e > 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return r;
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                            const MonomialOrder& o, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = o.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().coef = -out.back().coef;
      ++j;
    } else {
      Rational s = negate_b ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  const Polynomial& bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
  Polynomial p(a.ctx_, a.order_);
  p.terms_ = merge_add(a.terms_, bb.terms_, a.order_, false);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  const Polynomial& bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
  Polynomial p(a.ctx_, a.order_);
  p.terms_ = merge_add(a.terms_, bb.terms_, a.order_, true);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_, a.order_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  std::vector<Term> all;
  all.reserve(small.size() * big.size());
  for (const auto& s : small.terms_)
    for (const auto& t : big.terms_) all.push_back({s.mono * t.mono, s.coef * t.coef});
  return Polynomial::from_terms(a.ctx_, std::move(all), a.order_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.ctx_, b.ctx_)) return false;
  if (a.size() != b.size()) return false;
  const Polynomial& bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.terms_[i].mono == bb.terms_[i].mono) ||
        a.terms_[i].coef != bb.terms_[i].coef)
      return false;
  return true;
}

Polynomial Polynomial::derive(const std::string& var) const {
  return derive(ctx_->require(var));
}

Polynomial Polynomial::derive(std::size_t var) const {
  if (var >= ctx_->size()) throw InputError("unknown variable index");
  std::vector<Term> t;
  for (const auto& term : terms_) {
    const unsigned e = term.mono.exp[var];
    if (e == 0) continue;
    Monomial m = term.mono;
    m.exp[var] = static_cast<std::uint16_t>(e - 1);
    m.degree -= 1;
    t.push_back({m, term.coef * Rational(static_cast<long>(e))});
  }
  // Derivation preserves the relative order of surviving terms only for
  // degree-compatible orders, so re-sort.
  return from_terms(ctx_, std::move(t), order_);
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) {
    Monomial m = term.mono;
    const unsigned e = m.exp[var];
    m.exp[var] = 0;
    m.degree -= e;
    t.push_back({m, term.coef * value.pow(e)});
  }
  return from_terms(ctx_, std::move(t), order_);
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  require_same(*this, value);
  auto coeffs = coefficients_in(*this, var);
  Polynomial acc(ctx_, order_);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * value + coeffs[i];
  return acc.with_order(order_);
}

namespace {

template <typename T>
std::vector<std::vector<T>> power_table(const std::vector<Term>& terms,
                                        std::span<const T> values,
                                        std::size_t nvars, const T& one) {
  std::vector<unsigned> maxe(nvars, 0);
  for (const auto& t : terms)
    for (std::size_t v = 0; v < nvars; ++v) maxe[v] = std::max<unsigned>(maxe[v], t.mono.exp[v]);
  std::vector<std::vector<T>> pw(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    pw[v].reserve(maxe[v] + 1);
    pw[v].push_back(one);
    for (unsigned e = 1; e <= maxe[v]; ++e) pw[v].push_back(pw[v].back() * values[v]);
  }
  return pw;
}

}  // namespace

Rational Polynomial::eval(std::span<const Rational> values) const {
  if (values.size() < ctx_->size()) throw InputError("missing variable binding");
  const auto pw = power_table<Rational>(terms_, values, ctx_->size(), Rational(1));
  Rational acc;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < ctx_->size(); ++i)
      if (t.mono.exp[i] != 0) v *= pw[i][t.mono.exp[i]];
    acc += v;
  }
  return acc;
}

QuadExt Polynomial::eval(std::span<const QuadExt> values) const {
  if (values.size() < ctx_->size()) throw InputError("missing variable binding");
  const auto pw = power_table<QuadExt>(terms_, values, ctx_->size(), QuadExt(Rational(1)));
  QuadExt acc;
  for (const auto& t : terms_) {
    QuadExt v(t.coef);
    for (std::size_t i = 0; i < ctx_->size(); ++i)
      if (t.mono.exp[i] != 0) v = v * pw[i][t.mono.exp[i]];
    acc = acc + v;
  }
  return acc;
}

Interval Polynomial::eval(std::span<const Interval> values) const {
  if (values.size() < ctx_->size()) throw InputError("missing variable binding");
  // Recursive Horner in the first variable used keeps overestimation modest.
  std::vector<std::vector<Interval>> pw(ctx_->size());
  for (std::size_t v = 0; v < ctx_->size(); ++v) {
    const unsigned d = degree_in(v);
    for (unsigned e = 0; e <= d; ++e) pw[v].push_back(ipow(values[v], e));
  }
  Interval acc = Interval::point(Rational(0));
  for (const auto& t : terms_) {
    Interval v = Interval::point(t.coef);
    for (std::size_t i = 0; i < ctx_->size(); ++i)
      if (t.mono.exp[i] != 0) v = v * pw[i][t.mono.exp[i]];
    acc = acc + v;
  }
  return acc;
}

double Polynomial::eval(std::span<const double> values) const {
  if (values.size() < ctx_->size()) throw InputError("missing variable binding");
  const auto pw = power_table<double>(terms_, values, ctx_->size(), 1.0);
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coef.to_double();
    for (std::size_t i = 0; i < ctx_->size(); ++i)
      if (t.mono.exp[i] != 0) v *= pw[i][t.mono.exp[i]];
    acc += v;
  }
  return acc;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> v(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    auto it = point.find(ctx_->name(i));
    if (it == point.end())
      throw InputError("missing binding for variable '" + ctx_->name(i) + "'",
                       "E_MISSING_BINDING");
    v[i] = it->second;
  }
  return eval(std::span<const Rational>(v));
}

QuadExt Polynomial::eval(const std::map<std::string, QuadExt>& point) const {
  std::vector<QuadExt> v(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    auto it = point.find(ctx_->name(i));
    if (it == point.end())
      throw InputError("missing binding for variable '" + ctx_->name(i) + "'",
                       "E_MISSING_BINDING");
    v[i] = it->second;
  }
  return eval(std::span<const QuadExt>(v));
}

Rational Polynomial::content() const {
  if (is_zero()) throw InputError("content of the zero polynomial");
  Integer l = 1;
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.den().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.num().get_mpz_t());
  }
  // gcd of numerators over lcm of denominators is the content of a
  // polynomial whose coefficients are already reduced fractions.
  Rational c = Rational::make(g, l);
  const Polynomial& d = order_.kind() == MonomialOrder::Kind::kDegRevLex
                            ? *this
                            : with_order(MonomialOrder::degrevlex());
  return d.lead_coef().sign() < 0 ? -c : c;
}

Polynomial Polynomial::normalize_integer_primitive() const {
  if (is_zero())
    throw InputError("cannot normalize the zero polynomial", "E_ZERO_POLY");
  return scaled(Rational(1) / content());
}

UPoly Polynomial::to_upoly(std::size_t var) const {
  std::vector<Rational> c(degree_in(var) + 1);
  for (const auto& t : terms_) {
    if (t.mono.degree != t.mono.exp[var])
      throw InputError("polynomial is not univariate in '" + ctx_->name(var) + "'");
    c[t.mono.exp[var]] += t.coef;
  }
  return UPoly(std::move(c));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  const Polynomial& p = order_.kind() == MonomialOrder::Kind::kDegRevLex
                            ? *this
                            : with_order(MonomialOrder::degrevlex());
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms_) {
    const bool neg = t.coef.sign() < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const Rational a = t.coef.abs();
    bool need_star = false;
    if (!a.is_one() || t.mono.is_one()) {
      os << a;
      need_star = true;
    }
    for (std::size_t v = 0; v < ctx_->size(); ++v) {
      const unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << ctx_->name(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  const unsigned d = f.degree_in(var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    const unsigned e = m.exp[var];
    m.exp[var] = 0;
    m.degree -= e;
    buckets[e].push_back({m, t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  for (auto& b : buckets)
    out.push_back(Polynomial::from_terms(f.context(), std::move(b), f.order()));
  if (f.is_zero()) out.assign(1, Polynomial(f.context(), f.order()));
  return out;
}

Polynomial from_coefficients(const std::vector<Polynomial>& coeffs,
                             std::size_t var, const ContextPtr& ctx) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (const auto& term : coeffs[i].terms()) {
      Monomial m = term.mono;
      m.exp[var] = static_cast<std::uint16_t>(m.exp[var] + i);
      m.degree += static_cast<std::uint32_t>(i);
      t.push_back({m, term.coef});
    }
  return Polynomial::from_terms(ctx, std::move(t));
}

}  // namespace locuskit
