#include "locuskit/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "locuskit/errors.hpp"

namespace locuskit {

Rational Rational::make(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator", "E_ZERO_DENOMINATOR");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q), Canonical{});
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    return InputError("malformed rational '" + std::string(text) + "'",
                      "E_SYNTAX");
  };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw fail();

  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  if (i >= s.size()) throw fail();

  const auto slash = s.find('/', i);
  if (slash != std::string::npos) {
    const std::string n = s.substr(i, slash - i);
    const std::string d = s.substr(slash + 1);
    auto digits = [](const std::string& t) {
      return !t.empty() &&
             std::all_of(t.begin(), t.end(),
                         [](unsigned char c) { return std::isdigit(c); });
    };
    if (!digits(n) || !digits(d)) throw fail();
    Rational r = make(Integer(n), Integer(d));
    return neg ? -r : r;
  }

  // Decimal with optional fraction and exponent.
  std::string int_part;
  std::string frac_part;
  long exponent = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    int_part += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      frac_part += s[i++];
  }
  if (int_part.empty() && frac_part.empty()) throw fail();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    std::string e;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      e += s[i++];
    if (e.empty() || e.size() > 6) throw fail();
    exponent = std::stol(e) * (eneg ? -1 : 1);
  }
  if (i != s.size()) throw fail();

  Integer num(int_part.empty() ? std::string("0") : int_part + "");
  if (!frac_part.empty()) num = Integer(int_part + frac_part);
  exponent -= static_cast<long>(frac_part.size());
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(
                                           exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? make(num, scale) : Rational(Integer(num * scale));
  return neg ? -r : r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero", "E_ZERO_DENOMINATOR");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(mpq_class(n, d), Canonical{});
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Interval::Interval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw InputError("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return {*mn, *mx};
}

Interval ipow(const Interval& a, unsigned e) {
  if (e == 0) return Interval::point(Rational(1));
  Rational l = a.lo.pow(e);
  Rational h = a.hi.pow(e);
  if (e % 2 == 1) return {l, h};
  if (a.lo.sign() >= 0) return {l, h};
  if (a.hi.sign() <= 0) return {h, l};
  return {Rational(0), std::max(l, h)};
}

QuadExt::QuadExt(Rational u, Rational v, const Integer& n)
    : u_(std::move(u)), v_(std::move(v)), n_(n) {
  if (n_ < 0) throw InputError("negative radicand");
  if (!is_squarefree(n_)) throw InputError("radicand must be square-free");
  if (n_ == 1) {
    u_ += v_;
    v_ = Rational(0);
  }
  if (n_ <= 1) {
    v_ = Rational(0);
    n_ = 0;
  }
  if (v_.is_zero()) n_ = 0;
}

Integer QuadExt::join(const QuadExt& a, const QuadExt& b) {
  if (a.n_ == 0) return b.n_;
  if (b.n_ == 0 || a.n_ == b.n_) return a.n_;
  throw InputError("QuadExt radicand mismatch: " + a.n_.get_str() + " vs " +
                       b.n_.get_str(),
                   "E_RADICAND");
}

int QuadExt::sign() const {
  const int su = u_.sign();
  const int sv = v_.sign();
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // u and v*sqrt(n) have opposite signs: compare u^2 with v^2 n.
  const Rational lhs = u_ * u_;
  const Rational rhs = v_ * v_ * Rational(n_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? su : sv;
}

double QuadExt::to_double() const {
  return u_.to_double() + v_.to_double() * std::sqrt(n_.get_d());
}

std::string QuadExt::str() const {
  if (v_.is_zero()) return u_.str();
  return u_.str() + (v_.sign() < 0 ? " - " : " + ") + v_.abs().str() +
         "*sqrt(" + n_.get_str() + ")";
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.u_ = -u_;
  r.v_ = -v_;
  return r;
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  QuadExt r;
  r.n_ = QuadExt::join(a, b);
  r.u_ = a.u_ + b.u_;
  r.v_ = a.v_ + b.v_;
  if (r.v_.is_zero()) r.n_ = 0;
  return r;
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  QuadExt r;
  const Integer n = QuadExt::join(a, b);
  r.u_ = a.u_ * b.u_ + a.v_ * b.v_ * Rational(n);
  r.v_ = a.u_ * b.v_ + a.v_ * b.u_;
  r.n_ = r.v_.is_zero() ? Integer(0) : n;
  return r;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  return a.u_ == b.u_ && a.v_ == b.v_ && (a.v_.is_zero() || a.n_ == b.n_);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) {
  return os << q.str();
}

namespace {
constexpr unsigned long kTrialLimit = 1'000'000;
}

std::optional<SquareSplit> split_square(const Integer& value) {
  if (value <= 0) return std::nullopt;
  Integer rest = value;
  Integer root = 1;
  Integer free_part = 1;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    unsigned mult = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++mult;
    }
    for (unsigned k = 0; k < mult / 2; ++k) root *= p;
    if (mult % 2 == 1) free_part *= p;
  }
  if (rest == 1) return SquareSplit{root, free_part};
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    return SquareSplit{root * s, free_part};
  }
  // rest has no prime factor <= kTrialLimit (or is itself prime); below
  // kTrialLimit^3 it is prime or a product of two distinct primes.
  const Integer limit = Integer(kTrialLimit) * kTrialLimit * kTrialLimit;
  if (rest < limit) return SquareSplit{root, free_part * rest};
  return std::nullopt;
}

bool is_squarefree(const Integer& n) {
  if (n == 0 || n == 1) return true;
  auto s = split_square(n);
  return s && s->square_root == 1;
}

long rational_log2(const Rational& q) {
  const long nb = static_cast<long>(mpz_sizeinbase(q.num().get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(q.den().get_mpz_t(), 2));
  return nb - db;
}

}  // namespace locuskit
