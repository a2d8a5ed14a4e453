#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gww/matrix.hpp"
#include "gww/unipoly.hpp"

namespace gww {

/// F = Q[z]/(m(z)) with m monic and irreducible over Q. Cheap to copy.
class NumberField {
 public:
  /// Verifies that min_poly is monic and irreducible.
  explicit NumberField(UniPoly min_poly);
  /// Q itself, presented as Q[z]/(z).
  static NumberField rationals();

  const UniPoly& min_poly() const noexcept { return data_->min_poly; }
  int degree() const noexcept { return data_->min_poly.degree(); }
  bool is_rational() const noexcept { return degree() == 1; }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.data_ == b.data_ || a.data_->min_poly == b.data_->min_poly;
  }

 private:
  struct Data {
    UniPoly min_poly;
  };
  std::shared_ptr<const Data> data_;
};

/// Element of a number field in power-basis coordinates 1, z, ..., z^{d-1}.
class NFElem {
 public:
  NFElem(NumberField field, const Rational& value);
  NFElem(NumberField field, std::vector<Rational> coords);
  /// Reduces an arbitrary polynomial in z modulo the minimal polynomial.
  static NFElem from_poly(NumberField field, const UniPoly& p);
  static NFElem generator(NumberField field);

  const NumberField& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  UniPoly as_poly() const { return UniPoly(coords_); }
  bool is_zero() const;
  bool is_rational() const;
  /// The constant coordinate; only meaningful when is_rational().
  const Rational& rational_part() const { return coords_.front(); }

  NFElem inverse() const;
  /// Matrix of multiplication by this element on the power basis.
  Matrix multiplication_matrix() const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const Rational& s, const NFElem& a);
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
  friend bool operator==(const NFElem& a, const NFElem& b);

  std::string to_string(const std::string& var = "z") const;

 private:
  NumberField field_;
  std::vector<Rational> coords_;
};

/// Trace of the multiplication endomorphism F -> F over Q.
Rational nf_trace(const NFElem& x);

/// F[T]/(T^2 - e1*T + e2). The quadratic may be reducible.
struct QuadExt {
  NumberField base;
  NFElem e1;
  NFElem e2;
};

/// c0 + c1*T in a QuadExt.
class QuadExtElem {
 public:
  QuadExtElem(std::shared_ptr<const QuadExt> ring, NFElem c0, NFElem c1);
  QuadExtElem(std::shared_ptr<const QuadExt> ring, const NFElem& c0);
  QuadExtElem(std::shared_ptr<const QuadExt> ring, const Rational& c0);
  /// The class of T.
  static QuadExtElem root(std::shared_ptr<const QuadExt> ring);

  const std::shared_ptr<const QuadExt>& ring() const noexcept { return ring_; }
  const NFElem& c0() const noexcept { return c0_; }
  const NFElem& c1() const noexcept { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  /// Image under T -> e1 - T.
  QuadExtElem conj() const;
  /// x * conj(x), an element of the base field.
  NFElem norm() const;
  /// Invertible iff the norm is nonzero.
  bool is_unit() const { return !norm().is_zero(); }
  QuadExtElem inverse() const;

  friend QuadExtElem operator+(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator-(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator-(const QuadExtElem& a);
  friend QuadExtElem operator*(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator/(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator*(const Rational& s, const QuadExtElem& a);
  friend bool operator==(const QuadExtElem& a, const QuadExtElem& b);

 private:
  void check_ring(const QuadExtElem& other) const;
  std::shared_ptr<const QuadExt> ring_;
  NFElem c0_;
  NFElem c1_;
};

/// Returns c0 for an element fixed by T -> e1 - T; throws NotGaloisSymmetric
/// when c1 != 0.
NFElem quad_reduce(const QuadExtElem& x);

/// Dense polynomial over a number field, lowest degree first, trimmed.
class NFPoly {
 public:
  NFPoly(NumberField field, std::vector<NFElem> coeffs);
  /// Maps a rational polynomial into F[x].
  NFPoly(NumberField field, const UniPoly& p);

  const NumberField& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<NFElem>& coeffs() const noexcept { return coeffs_; }
  NFElem operator()(const NFElem& x) const;

 private:
  NumberField field_;
  std::vector<NFElem> coeffs_;
};

NFPoly nf_poly_rem(const NFPoly& a, const NFPoly& b);
/// Monic gcd over F.
NFPoly nf_poly_gcd(const NFPoly& a, const NFPoly& b);

}  // namespace gww
