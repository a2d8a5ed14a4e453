#pragma once

#include <array>

#include "gww/gw.hpp"
#include "gww/unipoly.hpp"
#include "gww/writhe.hpp"

namespace gww {

/// Twisted cubic given by four independent binary cubics.
class EmbeddingDeg3 {
 public:
  /// Throws InvalidArgument unless all forms are cubics, NotEmbedding when the
  /// 4x4 coefficient matrix is singular.
  explicit EmbeddingDeg3(CurveForms forms);
  const CurveForms& forms() const noexcept { return forms_; }
  Matrix coefficient_matrix() const;

 private:
  CurveForms forms_;
};

/// det of the coefficient matrix; the isotopy class is its class mod 4th powers.
Rational isotopy_invariant_deg3(const EmbeddingDeg3& e);
bool isotopic_deg3(const EmbeddingDeg3& a, const EmbeddingDeg3& b);

struct Deg4Invariant {
  GWClass gw;
  /// det of the Hankel matrix, meaningful mod 12th powers.
  Rational det;
};

Deg4Invariant embedding_writhe_deg4(const RationalCurve& c);
/// Same GW class and determinants equal up to a 12th power.
bool isotopic_deg4(const RationalCurve& a, const RationalCurve& b);

/// Pointed degree-3 map g/f: f monic cubic, deg g < 3, gcd(f, g) = 1.
struct PointedRationalMap {
  UniPoly f;
  UniPoly g;
  PointedRationalMap(UniPoly f, UniPoly g);
};

/// Wedge coordinates x_i = h_i, where g/f = sum h_k t^{-k-1}; with this
/// placement the Hankel matrix of x equals H_3(f, g) entry by entry.
std::array<Rational, 5> cazanave_phi(const PointedRationalMap& m);

struct CazanaveClass {
  GWClass gw;
  Rational det;
};

/// Class and determinant of the Bezout matrix B_3(f, g).
CazanaveClass cazanave_class(const PointedRationalMap& m);

}  // namespace gww
