#pragma once

// Dense univariate polynomials over Q with Sturm-sequence real root
// isolation and bisection refinement.

#include <string>
#include <vector>

#include "locuskit/exact.hpp"

namespace locuskit {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients in ascending degree order; trailing zeros are trimmed.
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(const Rational& c, unsigned degree);
  static UPoly constant(const Rational& c) { return monomial(c, 0); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(unsigned i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& t) const;
  QuadExt eval(const QuadExt& t) const;
  Interval eval(const Interval& t) const;
  double eval(double t) const;
  /// Sign of f(t), exact.
  int sign_at(const Rational& t) const { return eval(t).sign(); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;
  /// f(t + shift)
  UPoly shift(const Rational& shift) const;
  /// f(-t)
  UPoly reflect() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};
/// Throws InputError on division by zero.
UDivision divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// s*a + t*b = g with g the monic gcd.
struct UBezout {
  UPoly g;
  UPoly s;
  UPoly t;
};
UBezout extended_gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);

/// Sturm chain of a nonzero polynomial.
std::vector<UPoly> sturm_chain(const UPoly& f);
/// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots(const std::vector<UPoly>& chain, const Rational& lo,
                const Rational& hi);
/// Cauchy bound: every real root has |t| < bound.
Rational root_bound(const UPoly& f);

/// An isolated real root: either exact (width 0) or an open interval
/// (lo, hi) with rational endpoints where f changes sign strictly.
struct RealRoot {
  Interval box;
  bool exact() const { return box.lo == box.hi; }
};

/// All distinct real roots of f (f != 0), ascending, each isolated to width
/// at most `max_width` (exact rational roots are detected and collapsed).
std::vector<RealRoot> isolate_real_roots(const UPoly& f,
                                         const Rational& max_width);

/// One bisection step on a sign-changing bracket; see exact module docs.
/// Requires f(lo) * f(hi) < 0; returns the half that still brackets the root,
/// or the degenerate [mid, mid] when the midpoint is an exact root.
Interval interval_refine_root(const UPoly& f, const Interval& box);

/// Refine a root bracket until width <= max_width (exact hits collapse).
RealRoot refine_root(const UPoly& f, RealRoot root, const Rational& max_width);

}  // namespace locuskit
