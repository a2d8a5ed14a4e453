#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gww/matrix.hpp"
#include "gww/numfield.hpp"
#include "gww/unipoly.hpp"

namespace gww {

/// Symmetric matrix over Q; construction rejects non-symmetric input.
class SymBilForm {
 public:
  explicit SymBilForm(Matrix entries);
  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// <a_1> + ... + <a_r>, all a_i nonzero. Compare with gw_equal, not ==.
class GWClass {
 public:
  GWClass() = default;
  explicit GWClass(std::vector<Rational> diag);
  static GWClass unit(const Rational& a) { return GWClass({a}); }

  const std::vector<Rational>& diag() const noexcept { return diag_; }
  std::size_t rank() const noexcept { return diag_.size(); }

  /// Same class with squarefree integer entries, sorted.
  GWClass normalized() const;
  std::string to_string() const;

  friend GWClass operator+(const GWClass& a, const GWClass& b);
  GWClass& operator+=(const GWClass& o) { return *this = *this + o; }
  /// <s> * c, the class of the scaled form s*c.
  friend GWClass operator*(const Rational& s, const GWClass& c);
  /// n-fold orthogonal sum.
  friend GWClass operator*(unsigned n, const GWClass& c);

 private:
  std::vector<Rational> diag_;
};

struct GWInvariants {
  int rank = 0;
  int signature = 0;
  /// Squarefree integer representative of the determinant's square class.
  Integer disc = 1;
  /// Hasse invariant at 2 and at each prime dividing an entry; +1 elsewhere.
  std::map<Integer, int> hasse;
  int hasse_inf = 1;
};

struct Diagonalization {
  std::vector<Rational> diag;
  /// P with P^T M P = diag(diag).
  Matrix transform;
};

Diagonalization diagonalize(const SymBilForm& m);
/// Throws SingularForm when det = 0.
GWClass gw_from_matrix(const SymBilForm& m);

/// Place of Q: a prime, or the real place.
struct Place {
  Integer prime;  // ignored when infinite
  bool infinite = false;
  static Place inf() { return {0, true}; }
  static Place at(const Integer& p) { return {p, false}; }
};

/// (a, b)_p for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& p);

/// prod_{i<j} (a_i, a_j)_p.
int hasse_invariant(const GWClass& c, const Place& p);
/// 2 together with all primes dividing some entry.
std::set<Integer> relevant_primes(const GWClass& c);

GWInvariants gw_invariants(const GWClass& c);
/// Hasse invariants at the given primes instead of the relevant ones.
GWInvariants gw_invariants(const GWClass& c, const std::set<Integer>& primes);
/// Isometry over Q by Hasse-Minkowski.
bool gw_equal(const GWClass& a, const GWClass& b);

/// Gram matrix (Tr_{F/Q}(a z^i z^j))_{i,j} of the scaled trace form.
Matrix trace_matrix(const NFElem& a);
/// Class of the scaled trace form; a must be nonzero.
GWClass trace_form(const NFElem& a);

/// Coefficients of x^i y^j in (f(x)g(y) - f(y)g(x))/(x - y), for monic f of
/// degree n and deg g < n.
SymBilForm bezout_matrix(const UniPoly& f, const UniPoly& g, int n);
/// Power-series coefficients h_0, h_1, ... of g/f = sum h_k t^{-k-1}.
std::vector<Rational> laurent_coefficients(const UniPoly& f, const UniPoly& g, int count);
/// (h_{i+j})_{i,j<n}; same constraints as bezout_matrix.
SymBilForm hankel_matrix(const UniPoly& f, const UniPoly& g, int n);

}  // namespace gww
