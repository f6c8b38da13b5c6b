#include <map>

#include "src/groebner_engine.hpp"
#include "src/modp.hpp"

namespace locuskit::detail {

namespace {

using modp::u64;

struct MTerm {
  Monomial m;
  u64 c;
};
using MPoly = std::vector<MTerm>;

struct PrimeRing {
  using Poly = MPoly;
  const MonomialOrder& order;
  u64 p;

  void monic(Poly& f) const {
    if (f.empty() || f[0].c == 1) return;
    const u64 inv = modp::invmod(f[0].c, p);
    for (auto& t : f) t.c = modp::mulmod(t.c, inv, p);
  }

  // f <- f - c*m*g from index `from` (whose term cancels).
  void sub_mul(Poly& f, std::size_t from, u64 c, const Monomial& m,
               const Poly& g, Poly& scratch) const {
    scratch.clear();
    std::size_t i = from + 1;
    std::size_t j = 1;
    while (i < f.size() || j < g.size()) {
      int cmp;
      Monomial gm;
      if (j < g.size()) gm = g[j].m * m;
      if (i == f.size())
        cmp = -1;
      else if (j == g.size())
        cmp = 1;
      else
        cmp = order.compare(f[i].m, gm);
      if (cmp > 0) {
        scratch.push_back(f[i++]);
      } else if (cmp < 0) {
        scratch.push_back({gm, modp::submod(0, modp::mulmod(c, g[j].c, p), p)});
        ++j;
      } else {
        const u64 v = modp::submod(f[i].c, modp::mulmod(c, g[j].c, p), p);
        if (v != 0) scratch.push_back({gm, v});
        ++i;
        ++j;
      }
    }
    f.resize(from);
    f.insert(f.end(), scratch.begin(), scratch.end());
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    const Monomial l = Monomial::lcm(f[0].m, g[0].m);
    const Monomial mf = l / f[0].m;
    Poly r;
    r.reserve(f.size());
    for (const auto& t : f) r.push_back({t.m * mf, t.c});
    Poly scratch;
    sub_mul(r, 0, 1, l / g[0].m, g, scratch);  // both monic
    return r;
  }

  void reduce(Poly& f, const std::vector<const Poly*>& G, bool full) const {
    Poly scratch;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Poly* div = nullptr;
      for (const Poly* g : G)
        if ((*g)[0].m.divides(f[pos].m)) {
          div = g;
          break;
        }
      if (div == nullptr) {
        if (!full) break;
        ++pos;
        continue;
      }
      sub_mul(f, pos, f[pos].c, f[pos].m / (*div)[0].m, *div, scratch);
    }
    monic(f);
  }

  void check(const Poly&) const {}
};

std::vector<u64> primes_below(u64 start, std::size_t count) {
  std::vector<u64> out;
  for (u64 n = start | 1u; out.size() < count; n -= 2)
    if (modp::is_prime(n)) out.push_back(n);
  return out;
}

// Signed rational n/d == v (mod M) with |n|, |d| <= sqrt(M/2).
bool rational_reconstruct(const Integer& v, const Integer& M, Integer& num,
                          Integer& den) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(M / 2).get_mpz_t());
  Integer r0 = M, r1 = v, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  num = t1 < 0 ? Integer(-r1) : r1;
  den = abs(t1);
  return true;
}

using Signature = std::vector<Monomial>;

Signature signature(const std::vector<MPoly>& g) {
  Signature s;
  for (const auto& p : g) s.push_back(p[0].m);
  return s;
}

bool same_signature(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// Exact acceptance test: candidate is a Groebner basis and contains the
// input ideal.
bool verify(const std::vector<IPoly>& cand, const std::vector<IPoly>& input,
            const MonomialOrder& order) {
  std::vector<const IPoly*> ptrs;
  for (const auto& g : cand) ptrs.push_back(&g);
  for (const auto& f : input) {
    IPoly r = f;
    reduce_in_place(r, ptrs, order, false);
    if (!r.empty()) return false;
  }
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (cand[i][0].m.coprime(cand[j][0].m)) continue;
      IPoly s = spoly(cand[i], cand[j], order);
      reduce_in_place(s, ptrs, order, false);
      if (!s.empty()) return false;
    }
  return true;
}

}  // namespace

std::vector<IPoly> modular_groebner(const std::vector<IPoly>& input,
                                    const MonomialOrder& order,
                                    const GroebnerOptions& opts,
                                    GroebnerStats& stats) {
  constexpr std::size_t kMaxPrimes = 96;
  const std::vector<u64> primes = primes_below((u64{1} << 62) - 1, kMaxPrimes);

  // Images grouped by leading-monomial signature; the most frequent
  // signature is taken as the lucky one.
  struct Group {
    Signature sig;
    std::vector<u64> moduli;
    std::vector<std::vector<MPoly>> images;
  };
  std::vector<Group> groups;
  std::vector<IPoly> last_candidate;

  for (const u64 p : primes) {
    std::vector<MPoly> img;
    bool bad = false;
    for (const auto& f : input) {
      MPoly g;
      for (const auto& t : f) {
        const u64 c = modp::reduce(t.c, p);
        if (c != 0) g.push_back({t.m, c});
      }
      // A vanishing leading coefficient changes the ideal's image.
      if (g.empty() || !(g[0].m == f[0].m)) {
        bad = true;
        break;
      }
      img.push_back(std::move(g));
    }
    if (bad) continue;
    PrimeRing ring{order, p};
    for (auto& g : img) ring.monic(g);
    Engine<PrimeRing> e(ring, order, opts);
    std::vector<MPoly> gb = e.run(std::move(img));
    stats.pairs_reduced += e.stats.pairs_reduced;
    stats.zero_reductions += e.stats.zero_reductions;
    stats.pairs_skipped += e.stats.pairs_skipped;

    const Signature sig = signature(gb);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return same_signature(g.sig, sig);
    });
    if (it == groups.end()) {
      groups.push_back({sig, {}, {}});
      it = groups.end() - 1;
    }
    it->moduli.push_back(p);
    it->images.push_back(std::move(gb));
    const Group& best = *std::max_element(
        groups.begin(), groups.end(), [](const Group& a, const Group& b) {
          return a.moduli.size() < b.moduli.size();
        });
    if (&best != &*it) continue;

    // CRT over the group's images, then rational reconstruction.
    const auto& imgs = best.images;
    Integer M = 1;
    for (const u64 q : best.moduli) M *= Integer(static_cast<unsigned long>(q));
    std::vector<IPoly> cand;
    bool ok = true;
    for (std::size_t k = 0; k < best.sig.size() && ok; ++k) {
      // Images share the support only if lucky; insist on equal supports.
      const MPoly& ref = imgs[0][k];
      for (const auto& im : imgs)
        if (im[k].size() != ref.size()) ok = false;
      if (!ok) break;
      std::vector<Integer> nums, dens;
      Integer lcm_den = 1;
      for (std::size_t t = 0; t < ref.size() && ok; ++t) {
        Integer v = 0, m = 1;
        for (std::size_t q = 0; q < imgs.size(); ++q) {
          if (!(imgs[q][k][t].m == ref[t].m)) {
            ok = false;
            break;
          }
          const Integer pq(static_cast<unsigned long>(best.moduli[q]));
          // v' = v + m * ((c - v) * m^{-1} mod pq)
          const u64 vm = modp::reduce(v, best.moduli[q]);
          const u64 mm = modp::reduce(m, best.moduli[q]);
          const u64 h = modp::mulmod(
              modp::submod(imgs[q][k][t].c, vm, best.moduli[q]),
              modp::invmod(mm, best.moduli[q]), best.moduli[q]);
          v += m * Integer(static_cast<unsigned long>(h));
          m *= pq;
        }
        Integer n, d;
        if (!ok || !rational_reconstruct(v, M, n, d)) {
          ok = false;
          break;
        }
        nums.push_back(n);
        dens.push_back(d);
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
      }
      if (!ok) break;
      IPoly q;
      for (std::size_t t = 0; t < ref.size(); ++t)
        q.push_back({ref[t].m, nums[t] * (lcm_den / dens[t])});
      make_primitive(q);
      cand.push_back(std::move(q));
    }
    if (!ok) continue;
    // Only verify once the reconstruction is stable across one more prime.
    bool stable = cand.size() == last_candidate.size();
    for (std::size_t k = 0; stable && k < cand.size(); ++k) {
      if (cand[k].size() != last_candidate[k].size()) {
        stable = false;
        break;
      }
      for (std::size_t t = 0; t < cand[k].size(); ++t)
        if (cand[k][t].c != last_candidate[k][t].c) {
          stable = false;
          break;
        }
    }
    last_candidate = cand;
    if (stable && verify(cand, input, order)) return cand;
  }
  // Fall back to the exact engine.
  Engine<IntegerRing> e({order, opts}, order, opts);
  std::vector<IPoly> out = e.run(input);
  stats = e.stats;
  return out;
}

}  // namespace locuskit::detail
