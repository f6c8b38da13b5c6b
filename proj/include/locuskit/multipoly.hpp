#pragma once

// Sparse multivariate polynomials over Q in a named variable context.
//
// A Polynomial is a list of (monomial, nonzero coefficient) terms kept in
// strictly descending order under the polynomial's MonomialOrder. The zero
// polynomial has no terms. All values are immutable once built.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locuskit/exact.hpp"
#include "locuskit/univariate.hpp"

namespace locuskit {

inline constexpr std::size_t kMaxVars = 16;

class VariableContext {
 public:
  /// Throws InputError on duplicate or malformed names, or too many names.
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Throws InputError naming the unknown variable.
  std::size_t require(const std::string& name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;
ContextPtr make_context(std::vector<std::string> names);
bool same_context(const ContextPtr& a, const ContextPtr& b);

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial var(std::size_t index, unsigned power = 1);
  bool is_one() const { return degree == 0; }
  bool divides(const Monomial& other) const;
  /// Caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp == b.exp;
  }
};

class MonomialOrder {
 public:
  enum class Kind { kLex, kDegRevLex, kBlock };

  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder degrevlex() {
    return MonomialOrder(Kind::kDegRevLex, 0);
  }
  /// First `split` variables by degrevlex, ties broken by degrevlex on the
  /// remaining variables. Every monomial involving the first block is larger
  /// than any monomial free of it.
  static MonomialOrder block(unsigned split) {
    return MonomialOrder(Kind::kBlock, split);
  }

  Kind kind() const { return kind_; }
  unsigned split() const { return split_; }
  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  std::string str() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, unsigned s) : kind_(k), split_(s) {}
  Kind kind_;
  unsigned split_;
};

struct Term {
  Monomial mono;
  Rational coef;
};

class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx,
                      MonomialOrder order = MonomialOrder::degrevlex());
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, const std::string& name);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  /// Embeds a univariate polynomial as a polynomial in variable `index`.
  static Polynomial from_upoly(ContextPtr ctx, std::size_t index,
                               const UPoly& u);

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_mono() const { return terms_.front().mono; }
  const Rational& lead_coef() const { return terms_.front().coef; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Variables (indices) occurring with positive exponent.
  std::vector<std::size_t> support() const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial with_order(const MonomialOrder& order) const;
  /// Re-express in another context; every used variable must exist there.
  Polynomial remap(const ContextPtr& ctx,
                   MonomialOrder order = MonomialOrder::degrevlex()) const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& s) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Throws InputError if contexts differ. The result keeps the order of the
  /// left operand.
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Same context and same set of terms (orders may differ).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Formal partial derivative; throws InputError for an unknown variable.
  Polynomial derive(const std::string& var) const;
  Polynomial derive(std::size_t var) const;

  /// Substitute `value` for one variable (result stays in this context).
  Polynomial substitute(std::size_t var, const Rational& value) const;
  /// Substitute a polynomial for one variable.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  /// Exact evaluation. Bindings must cover every context variable.
  Rational eval(const std::map<std::string, Rational>& point) const;
  QuadExt eval(const std::map<std::string, QuadExt>& point) const;
  Rational eval(std::span<const Rational> values) const;
  QuadExt eval(std::span<const QuadExt> values) const;
  Interval eval(std::span<const Interval> values) const;
  double eval(std::span<const double> values) const;

  /// Coprime integer coefficients with positive leading coefficient under
  /// degrevlex. Throws InputError for the zero polynomial.
  Polynomial normalize_integer_primitive() const;
  /// Rational content c with this = c * normalize_integer_primitive().
  Rational content() const;

  /// Univariate view; throws InputError if another variable occurs.
  UPoly to_upoly(std::size_t var) const;

  /// Canonical text: degrevlex over the context order, explicit `^` and `*`.
  std::string str() const;

 private:
  void sort_and_merge();
  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Coefficients of f viewed as a polynomial in `var`: result[i] is the
/// coefficient of var^i (a polynomial free of var, same context).
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var);
/// Inverse of coefficients_in.
Polynomial from_coefficients(const std::vector<Polynomial>& coeffs,
                             std::size_t var, const ContextPtr& ctx);

}  // namespace locuskit
