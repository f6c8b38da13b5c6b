#pragma once

// Dense univariate polynomials over Z/pZ for word-size primes. Internal to
// the factorization and modular Groebner code.

#include <cstdint>
#include <random>
#include <vector>

#include "locuskit/exact.hpp"

namespace locuskit::modp {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 addmod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
/// Reduce an integer (or a rational with invertible denominator) mod p.
u64 reduce(const Integer& v, u64 p);
bool reduce(const Rational& v, u64 p, u64& out);
bool is_prime(u64 n);

/// Ascending coefficients, trimmed (zero polynomial is empty).
using Poly = std::vector<u64>;

void trim(Poly& a);
int deg(const Poly& a);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 s, u64 p);
void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(const Poly& a, const Poly& b, u64 p);
/// s*a + t*b = gcd (monic)
void ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& g, Poly& s, Poly& t);
Poly derivative(const Poly& a, u64 p);
/// base^e mod m
Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 p);

/// Monic irreducible factors of a monic squarefree polynomial (p odd),
/// sorted by degree then coefficients. Deterministic for a fixed seed.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::uint64_t seed);

}  // namespace locuskit::modp
