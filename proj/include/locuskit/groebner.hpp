#pragma once

// Buchberger's algorithm with the coprime and chain criteria
// (Gebauer-Moeller update) and sugar pair selection, plus elimination and
// locus extraction on top of it.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "locuskit/errors.hpp"
#include "locuskit/multipoly.hpp"
#include "locuskit/system.hpp"

namespace locuskit {

struct GroebnerProgress {
  std::size_t pairs_done = 0;
  std::size_t pairs_pending = 0;
  std::size_t basis_size = 0;
};

struct GroebnerOptions {
  /// Maximum number of S-pairs to reduce before giving up.
  std::size_t max_pairs = 200'000;
  /// Maximum coefficient size (bits) of any basis element.
  std::size_t max_coeff_bits = 1u << 20;
  /// Polled between pair reductions; returning true aborts with E_CANCELLED.
  std::function<bool(const GroebnerProgress&)> poll;
  /// Compute images modulo word-size primes and lift (verified exactly).
  bool modular = false;

  /// Defaults with LOCUSKIT_BUDGET_PAIRS applied when set.
  static GroebnerOptions from_env();
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
};

struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::degrevlex();
  /// Reduced basis: integer-primitive, positive leading coefficient, sorted
  /// by ascending leading monomial.
  std::vector<Polynomial> polys;
  GroebnerStats stats;

  bool is_unit_ideal() const {
    return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
  }
};

/// Normal form of f modulo G under `order` (full reduction).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G,
                  const MonomialOrder& order);

/// Reduced Groebner basis. Throws BudgetExhausted when a cap is hit.
GroebnerBasis buchberger(const std::vector<Polynomial>& F,
                         const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

/// Reduced basis checks: every S-polynomial and every input reduces to 0.
bool is_groebner_basis(const std::vector<Polynomial>& G,
                       const MonomialOrder& order);

bool membership(const Polynomial& f, const GroebnerBasis& gb);

struct EliminationOptions {
  GroebnerOptions groebner;
  /// Pure lex instead of the block order.
  bool use_lex = false;
  /// Adjoin t*y - 1 for an auxiliary t (y = `saturate_var`) and eliminate t.
  std::string saturate_var;
};

struct EliminationResult {
  /// Generators of the elimination ideal, in a context of the retained
  /// variables (context order preserved).
  std::vector<Polynomial> generators;
  ContextPtr retained_context;
  /// Basis of the full ideal in the elimination-first context.
  GroebnerBasis basis;
  ContextPtr basis_context;
};

/// Elimination ideal of sys w.r.t. sys.elim_vars.
EliminationResult eliminate_full(const PolySystem& sys,
                                 const EliminationOptions& opts = {});
std::vector<Polynomial> eliminate(const PolySystem& sys,
                                  const EliminationOptions& opts = {});

enum class DegenerateLocus { kEmpty, kWholePlane };

class EmptyEliminationIdeal : public InputError {
 public:
  explicit EmptyEliminationIdeal(DegenerateLocus kind);
  DegenerateLocus kind() const { return kind_; }

 private:
  DegenerateLocus kind_;
};

/// gcd of the generators, squarefree part, integer-primitive. Throws
/// EmptyEliminationIdeal when the generators are all zero (whole plane) or
/// contain a nonzero constant (empty locus).
Polynomial locus_polynomial(const std::vector<Polynomial>& gens);

}  // namespace locuskit
