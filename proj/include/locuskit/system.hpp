#pragma once

#include <string>
#include <vector>

#include "locuskit/multipoly.hpp"

namespace locuskit {

/// Hypotheses plus thesis as polynomials (each implicitly "= 0") together
/// with the variables to eliminate.
struct PolySystem {
  ContextPtr context;
  std::vector<Polynomial> generators;
  std::vector<std::string> elim_vars;

  /// Throws InputError when a generator is zero, lives in another context,
  /// or an elimination variable is undeclared.
  void validate() const;
  /// Context variables not listed in elim_vars, in context order.
  std::vector<std::string> retained_vars() const;

  friend bool operator==(const PolySystem& a, const PolySystem& b);
};

}  // namespace locuskit
