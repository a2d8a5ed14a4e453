#pragma once

// Polynomials over F_p for small odd primes p < 2^31, lowest degree first.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gww/rational.hpp"

namespace gww::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }
u64 inv(u64 a, u64 p);

void trim(Poly& f);
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 s, u64 p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
/// s*a + t*b = 1 for coprime a, b.
std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, u64 p);
Poly derivative(const Poly& a, u64 p);
Poly powmod(Poly base, const Integer& exponent, const Poly& modulus, u64 p);

Poly reduce(const std::vector<Integer>& f, u64 p);

/// Monic irreducible factors of a monic squarefree polynomial.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng);

}  // namespace gww::modp
