#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gww/gw.hpp"
#include "gww/matrix.hpp"
#include "gww/numfield.hpp"
#include "gww/unipoly.hpp"

namespace gww {

/// Binary form of degree n; coeffs[k] multiplies r^{n-k} s^k.
struct BinaryForm {
  int degree = 0;
  std::vector<Rational> coeffs;

  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rational> coeffs);
  /// p(1, t) for the chart t = s/r.
  UniPoly dehomogenized() const { return UniPoly(coeffs); }
  Rational operator()(const Rational& r, const Rational& s) const;
  std::string to_string() const;
};

using CurveForms = std::array<BinaryForm, 4>;

/// (p_0 : p_1 : p_2 : p_3): P^1 -> P^3 with linearly independent forms of a
/// common degree and no common zero. Construction throws NotEmbedding otherwise.
class RationalCurve {
 public:
  explicit RationalCurve(CurveForms forms);

  int degree() const noexcept { return forms_[0].degree; }
  const CurveForms& forms() const noexcept { return forms_; }
  const BinaryForm& form(std::size_t i) const { return forms_[i]; }

  /// phi(r, s).
  std::array<Rational, 4> operator()(const Rational& r, const Rational& s) const;
  /// Post-composition with a 4x4 matrix acting on P^3.
  RationalCurve transformed(const Matrix& a) const;

 private:
  CurveForms forms_;
};

using Point3 = std::array<Rational, 4>;

/// x_i = det of the 5x5 matrix with rows p_0, ..., p_3, r^{4-i} s^i.
std::array<Rational, 5> wedge_coords(const CurveForms& forms);
inline std::array<Rational, 5> wedge_coords(const RationalCurve& c) { return wedge_coords(c.forms()); }

/// Hankel matrix ((x0,x1,x2),(x1,x2,x3),(x2,x3,x4)) of the wedge coordinates.
SymBilForm hankel_lambda(const CurveForms& forms);
inline SymBilForm hankel_lambda(const RationalCurve& c) { return hankel_lambda(c.forms()); }

/// Degree-4 curve whose wedge coordinates are exactly x (x nonzero).
RationalCurve curve_with_wedge_coords(const std::array<Rational, 5>& x);

/// Secant line through the query point, as the unordered parameter pair
/// {t1, t2} (t = s/r) over its field of definition F. For finite pairs
/// e1 = t1 + t2, e2 = t1 t2. When one parameter is infinite, at_infinity is
/// set, e1 = 1 and e2 is the finite parameter.
struct SecantDatum {
  NumberField field;
  NFElem e1;
  NFElem e2;
  bool at_infinity = false;

  /// Sort key: minimal polynomial, then coordinates.
  std::string key() const;
  std::string to_string() const;
};

/// Rows (l, m1, m2, m3): affine coordinates m_i / l. det is a nonzero square.
struct Chart {
  Matrix matrix;

  explicit Chart(Matrix m);
  static Chart identity() { return Chart(Matrix::identity(4)); }
  /// Completes l with unit rows and rescales so that det = 1.
  static Chart from_linear_form(const std::array<Rational, 4>& l);
};

struct WritheOptions {
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Every secant line of c through q, sorted by SecantDatum::key.
std::vector<SecantDatum> secants_through_point(const RationalCurve& c, const Point3& q,
                                               const WritheOptions& opts = {});

/// F' = F[T]/(T^2 - e1 T + e2); a point of P^3 over F'.
using QuadPoint = std::array<QuadExtElem, 4>;

/// First chart among x0, x0+x3, then random small integer forms, whose l is
/// a unit at every point.
Chart select_chart(const std::vector<QuadPoint>& points, const WritheOptions& opts = {});
Chart select_chart(const std::vector<Point3>& points, const WritheOptions& opts = {});

struct LocalWritheOptions {
  WritheOptions base;
  /// Use this chart instead of select_chart.
  std::optional<Chart> chart;
  /// Exchange the roles of the two endpoints.
  bool swap_endpoints = false;
};

/// det(v, u, w) reduced to the field of definition F.
NFElem local_writhe_det(const RationalCurve& c, const Point3& q, const SecantDatum& s,
                        const LocalWritheOptions& opts = {});
/// Tr_{F/Q} <det(v, u, w)>.
GWClass local_writhe(const RationalCurve& c, const Point3& q, const SecantDatum& s,
                     const LocalWritheOptions& opts = {});

struct LocalContribution {
  SecantDatum secant;
  NFElem det;
  GWClass cls;
};

struct WritheResult {
  GWClass gw;
  /// Determinant of the Hankel matrix (degree-4 path only).
  std::optional<Rational> det;
  std::optional<SymBilForm> lambda;
  std::vector<LocalContribution> locals;
};

/// Class of the Hankel matrix; NotEmbedding when it is singular.
WritheResult writhe_deg4(const RationalCurve& c);
/// Sum of local writhes over all secants through q.
WritheResult writhe_local_sum(const RationalCurve& c, const Point3& q, const WritheOptions& opts = {});

}  // namespace gww
