#pragma once

// Multivariate gcd, squarefree decomposition and irreducible factorization
// over Q (univariate via Zassenhaus, bivariate via Hensel lifting at a
// lucky specialization).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locuskit/errors.hpp"
#include "locuskit/multipoly.hpp"

namespace locuskit {

struct Factor {
  Polynomial poly;
  unsigned multiplicity;
};

struct Factorization {
  Rational content;
  std::vector<Factor> factors;

  /// content * prod(factor^multiplicity)
  Polynomial expand(const ContextPtr& ctx) const;
  /// JSON text: {"content": "...", "factors": [{"poly": "...", "multiplicity": k}]}
  std::string to_json() const;
};

/// Exact quotient f / g; nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Integer-primitive gcd with positive leading coefficient.
/// gcd(f, 0) = normalize(f); gcd(0, 0) = 0.
Polynomial gcd_poly(const Polynomial& f, const Polynomial& g);

/// Squarefree decomposition: pairwise coprime squarefree integer-primitive
/// parts with multiplicities, content chosen so the product reproduces f.
Factorization squarefree(const Polynomial& f);
/// Product of the squarefree parts (each once), integer-primitive.
Polynomial squarefree_part(const Polynomial& f);

/// Irreducible factorization over Q of a univariate polynomial (degree >= 1).
Factorization factor_univariate(const UPoly& f, const ContextPtr& ctx,
                                std::size_t var);
/// Convenience: factors of a univariate UPoly as primitive integer UPolys.
std::vector<std::pair<UPoly, unsigned>> factor_upoly(const UPoly& f);

struct BivariateOptions {
  /// Offset into the specialization sequence 1, -1, 2, -2, ...
  unsigned seed = 0;
  unsigned max_attempts = 64;
};

class LuckyValueNotFound : public Error {
 public:
  explicit LuckyValueNotFound(const std::string& what)
      : Error("E_NO_LUCKY_VALUE", what) {}
};

/// Complete irreducible factorization over Q of a polynomial whose support
/// involves at most two variables. Factors are ordered by total degree, then
/// canonical serialization.
Factorization factor_bivariate(const Polynomial& f,
                               const BivariateOptions& opts = {});

}  // namespace locuskit
