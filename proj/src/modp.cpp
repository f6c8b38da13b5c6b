#include "src/modp.hpp"

#include <algorithm>

#include "locuskit/errors.hpp"

namespace locuskit::modp {

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw InvariantViolation("modular inverse of zero");
  return powmod(a, p - 2, p);
}

u64 reduce(const Integer& v, u64 p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

bool reduce(const Rational& v, u64 p, u64& out) {
  const u64 d = reduce(v.den(), p);
  if (d == 0) return false;
  out = mulmod(reduce(v.num(), p), invmod(d, p), p);
  return true;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = addmod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 s, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  if (b.empty()) throw InvariantViolation("mod-p division by zero");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  const u64 inv = invmod(b.back(), p);
  for (std::size_t i = r.size() - 1;; --i) {
    const u64 c = mulmod(r[i], inv, p);
    q[i - (b.size() - 1)] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) {
        const std::size_t k = i - (b.size() - 1) + j;
        r[k] = submod(r[k], mulmod(c, b[j], p), p);
      }
    if (i == b.size() - 1) break;
  }
  trim(q);
  trim(r);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

Poly gcd(const Poly& a, const Poly& b, u64 p) {
  Poly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

void ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& g, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = invmod(r0.back(), p);
  g = scale(r0, inv, p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 p) {
  Poly result{1};
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = rem(mul(result, b, p), m, p);
  }
  if (e == 0) return rem(Poly{1}, m, p);
  return result;
}

namespace {

// Split a product of distinct irreducibles of equal degree d.
void equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    Poly r(static_cast<std::size_t>(deg(f)));
    for (auto& c : r) c = dist(rng);
    trim(r);
    if (deg(r) < 1) continue;
    Poly h = powmod(r, e, f, p);
    h = sub(h, Poly{1}, p);
    Poly g = gcd(f, h, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      Poly q, rr;
      divmod(f, g, p, q, rr);
      equal_degree(g, d, p, rng, out);
      equal_degree(monic(q, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f_in, u64 p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  Poly f = monic(f_in, p);
  if (deg(f) <= 0) return out;
  Poly h{0, 1};  // x
  const Poly x{0, 1};
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, Integer(p), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      Poly q, r;
      divmod(f, g, p, q, r);
      f = monic(q, p);
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace locuskit::modp
