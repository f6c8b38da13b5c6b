#pragma once

// Exact scalar types: GMP-backed integers and canonical rationals, rational
// intervals, and the quadratic extension Q(sqrt n).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace locuskit {

using Integer = mpz_class;

/// Canonical rational number: reduced, positive denominator, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& v) : q_(v) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Throws InputError on a zero denominator.
  static Rational make(const Integer& num, const Integer& den);
  /// Accepts "3", "-7/4", "2.01", "-.5", "1e-3" (exactly converted).
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_), Canonical{}); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  /// Throws InputError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(unsigned e) const;

 private:
  struct Canonical {};
  Rational(mpq_class q, Canonical) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  /// Throws InputError when lo > hi.
  Interval(Rational lo_, Rational hi_);
  static Interval point(const Rational& v) { return {v, v}; }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval ipow(const Interval& a, unsigned e);

/// u + v*sqrt(n) for a fixed square-free radicand n >= 0. For n in {0, 1}
/// the value is folded into u.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational u) : u_(std::move(u)) {}  // NOLINT(google-explicit-constructor)
  /// Throws InputError if n < 0 or n is not square-free.
  QuadExt(Rational u, Rational v, const Integer& n);

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Integer& n() const { return n_; }
  bool is_rational() const { return v_.is_zero(); }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  /// Exact sign of u + v*sqrt(n).
  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadExt operator-() const;
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  /// Throws InputError when both operands carry different radicands.
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend bool operator==(const QuadExt& a, const QuadExt& b);

 private:
  static Integer join(const QuadExt& a, const QuadExt& b);
  Rational u_;
  Rational v_;
  Integer n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

/// Radicand helpers: value = square * squarefree with squarefree > 0 as
/// long as value > 0. Returns nullopt when trial division cannot certify
/// the square-free cofactor (huge inputs).
struct SquareSplit {
  Integer square_root;  // s with s^2 * rest = value
  Integer rest;         // square-free
};
std::optional<SquareSplit> split_square(const Integer& value);
bool is_squarefree(const Integer& n);

/// floor(log2(|q|)) style magnitude helper; for q != 0.
long rational_log2(const Rational& q);

}  // namespace locuskit
