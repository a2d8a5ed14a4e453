#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gww/matrix.hpp"
#include "gww/rational.hpp"

namespace gww {

/// Dense univariate polynomial over Q, lowest degree first. The zero
/// polynomial has no coefficients and degree kZeroDegree.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero past the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Reversal t^n f(1/t) with respect to the formal degree n.
  UniPoly reversed(int formal_degree) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& base, unsigned exponent);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);
/// Bezout cofactors: s*f + t*g = gcd(f, g).
struct ExtGcd {
  UniPoly gcd, s, t;
};
ExtGcd poly_ext_gcd(const UniPoly& f, const UniPoly& g);

/// Res(f,g) = lc(f)^deg(g) * prod g(alpha) over the roots of f. f != 0.
Rational resultant(const UniPoly& f, const UniPoly& g);

/// Sylvester matrix with formal degrees m >= deg f, n >= deg g.
Matrix sylvester_matrix(const UniPoly& f, const UniPoly& g, int m, int n);

/// Coefficients c(i,j) of x^i y^j in (f(x)g(y) - f(y)g(x))/(x - y), as a
/// size x size matrix (size >= max degree).
Matrix bezoutian(const UniPoly& f, const UniPoly& g, int size);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace gww
