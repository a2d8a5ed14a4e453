#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace gww {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator) after construction
/// through the helpers below.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

Rational pow(const Rational& base, long exponent);
Integer ipow(const Integer& base, unsigned long exponent);

/// Prime factorization of |n| (n != 0): trial division, then Pollard rho.
std::map<Integer, unsigned> factor_integer(const Integer& n);

/// Signed squarefree integer in the same square class as a (a != 0).
Integer squarefree_part(const Rational& a);

/// True iff a/b lies in (Q^x)^k.
bool is_kth_power_class(const Rational& a, const Rational& b, unsigned k);

bool is_perfect_power(const Integer& n, unsigned k);

}  // namespace gww
