#pragma once

// Buchberger engine shared by the fraction-free integer path and the
// modular images. A Ring supplies the polynomial type (a vector of terms
// with members `m` and `c`, sorted descending) plus spoly / reduce.

#include <algorithm>
#include <string>
#include <vector>

#include "locuskit/errors.hpp"
#include "locuskit/groebner.hpp"

namespace locuskit::detail {

struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;

IPoly to_ipoly(const Polynomial& p, const MonomialOrder& order);
Polynomial to_poly(const IPoly& p, const ContextPtr& ctx,
                   const MonomialOrder& order);
void make_primitive(IPoly& p);
std::size_t max_bits(const IPoly& p);
/// Reduces p (top terms only unless `full`) and makes it primitive. Returns
/// `scale` with scale * p_in - p_out in the ideal generated by G.
Rational reduce_in_place(IPoly& p, const std::vector<const IPoly*>& G,
                         const MonomialOrder& order, bool full);
IPoly spoly(const IPoly& f, const IPoly& g, const MonomialOrder& order);

struct IntegerRing {
  using Poly = IPoly;
  const MonomialOrder& order;
  const GroebnerOptions& opts;

  Poly spoly(const Poly& f, const Poly& g) const {
    return detail::spoly(f, g, order);
  }
  void reduce(Poly& p, const std::vector<const Poly*>& G, bool full) const {
    reduce_in_place(p, G, order, full);
  }
  void check(const Poly& p) const {
    if (max_bits(p) > opts.max_coeff_bits)
      throw BudgetExhausted("Groebner coefficient budget exhausted (" +
                            std::to_string(max_bits(p)) + " bits)");
  }
};

template <class Ring>
class Engine {
 public:
  using Poly = typename Ring::Poly;

  Engine(Ring ring, const MonomialOrder& order, const GroebnerOptions& opts)
      : ring_(ring), order_(order), opts_(opts) {}

  GroebnerStats stats;

  std::vector<Poly> run(std::vector<Poly> input) {
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
      return order_.compare(a[0].m, b[0].m) < 0;
    });
    for (auto& f : input) {
      Poly h = std::move(f);
      reduce_top(h);
      if (!h.empty()) {
        const unsigned s = degree(h);
        add(std::move(h), s);
      }
    }
    while (!pairs_.empty()) {
      const std::size_t k = select();
      const Pair pr = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      if (stats.pairs_reduced >= opts_.max_pairs)
        throw BudgetExhausted("Groebner pair budget exhausted after " +
                              std::to_string(stats.pairs_reduced) + " pairs");
      if (opts_.poll &&
          opts_.poll({stats.pairs_reduced, pairs_.size(), active_count()}))
        throw Error("E_CANCELLED", "Groebner computation cancelled");
      ++stats.pairs_reduced;
      Poly s = ring_.spoly(basis_[pr.i], basis_[pr.j]);
      reduce_top(s);
      if (s.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      ring_.check(s);
      add(std::move(s), pr.sugar);
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
    std::size_t serial;
  };

  static unsigned degree(const Poly& p) {
    unsigned d = 0;
    for (const auto& t : p) d = std::max<unsigned>(d, t.m.degree);
    return d;
  }

  std::size_t active_count() const {
    return static_cast<std::size_t>(
        std::count(active_.begin(), active_.end(), true));
  }

  void reduce_top(Poly& p) {
    std::vector<const Poly*> g;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) g.push_back(&basis_[i]);
    ring_.reduce(p, g, false);
  }

  // Lowest sugar, then lowest lcm, then oldest pair.
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && a.serial < b.serial)) best = k;
    }
    return best;
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const unsigned si = sugar_[i] + l.degree - basis_[i][0].m.degree;
    const unsigned sj = sugar_[j] + l.degree - basis_[j][0].m.degree;
    return std::max(si, sj);
  }

  // Gebauer-Moeller update for the new element.
  void add(Poly h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial lh = basis_[hi][0].m;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g])
        C.push_back({g, Monomial::lcm(lh, basis_[g][0].m),
                     lh.coprime(basis_[g][0].m)});

    std::vector<Cand> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Cand& c = C[k];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q)
          if (C[q].lcm.divides(c.lcm)) keep = false;
        for (std::size_t q = 0; q < D.size() && keep; ++q)
          if (D[q].lcm.divides(c.lcm)) keep = false;
      }
      if (keep)
        D.push_back(c);
      else
        ++stats.pairs_skipped;
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + D.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(Monomial::lcm(basis_[p.i][0].m, lh) == p.lcm) &&
                        !(Monomial::lcm(basis_[p.j][0].m, lh) == p.lcm);
      if (drop)
        ++stats.pairs_skipped;
      else
        kept.push_back(p);
    }
    for (const auto& d : D) {
      if (d.coprime) {
        ++stats.pairs_skipped;
        continue;
      }
      kept.push_back({d.g, hi, d.lcm, pair_sugar(d.g, hi, d.lcm), serial_++});
    }
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g][0].m)) active_[g] = false;
  }

  std::vector<Poly> finish() {
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) minimal.push_back(basis_[i]);
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly& a, const Poly& b) {
                return order_.compare(a[0].m, b[0].m) < 0;
              });
    // Leads of a minimal basis are mutually irreducible, so full reduction
    // only touches tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const Poly*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      ring_.reduce(minimal[i], others, true);
    }
    return minimal;
  }

  Ring ring_;
  MonomialOrder order_;
  const GroebnerOptions& opts_;
  std::vector<Poly> basis_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t serial_ = 0;
};

/// Basis via images modulo word-size primes, lifted by CRT and rational
/// reconstruction, accepted only after an exact Groebner/containment check.
std::vector<IPoly> modular_groebner(const std::vector<IPoly>& input,
                                    const MonomialOrder& order,
                                    const GroebnerOptions& opts,
                                    GroebnerStats& stats);

}  // namespace locuskit::detail
