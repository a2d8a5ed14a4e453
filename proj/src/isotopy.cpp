#include "gww/isotopy.hpp"

#include "gww/errors.hpp"

namespace gww {

EmbeddingDeg3::EmbeddingDeg3(CurveForms forms) : forms_(std::move(forms)) {
  for (const auto& f : forms_) {
    if (f.degree != 3) fail(ErrorKind::InvalidArgument, "a twisted cubic needs four binary cubics");
  }
  if (determinant(coefficient_matrix()) == 0) {
    fail(ErrorKind::NotEmbedding, "cubic forms are linearly dependent");
  }
}

Matrix EmbeddingDeg3::coefficient_matrix() const {
  Matrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) m(i, k) = forms_[i].coeffs[k];
  }
  return m;
}

Rational isotopy_invariant_deg3(const EmbeddingDeg3& e) { return determinant(e.coefficient_matrix()); }

bool isotopic_deg3(const EmbeddingDeg3& a, const EmbeddingDeg3& b) {
  return is_kth_power_class(isotopy_invariant_deg3(a), isotopy_invariant_deg3(b), 4);
}

Deg4Invariant embedding_writhe_deg4(const RationalCurve& c) {
  WritheResult r = writhe_deg4(c);
  return {std::move(r.gw), *r.det};
}

bool isotopic_deg4(const RationalCurve& a, const RationalCurve& b) {
  const Deg4Invariant x = embedding_writhe_deg4(a);
  const Deg4Invariant y = embedding_writhe_deg4(b);
  return gw_equal(x.gw, y.gw) && is_kth_power_class(x.det, y.det, 12);
}

PointedRationalMap::PointedRationalMap(UniPoly f_, UniPoly g_) : f(std::move(f_)), g(std::move(g_)) {
  if (f.degree() != 3 || f.leading() != 1) fail(ErrorKind::InvalidArgument, "f must be a monic cubic");
  if (g.degree() >= 3) fail(ErrorKind::InvalidArgument, "g must have degree < 3");
  if (resultant(f, g) == 0) fail(ErrorKind::InvalidArgument, "f and g must be coprime");
}

std::array<Rational, 5> cazanave_phi(const PointedRationalMap& m) {
  const auto h = laurent_coefficients(m.f, m.g, 5);
  return {h[0], h[1], h[2], h[3], h[4]};
}

CazanaveClass cazanave_class(const PointedRationalMap& m) {
  const SymBilForm b = bezout_matrix(m.f, m.g, 3);
  return {gw_from_matrix(b), determinant(b.matrix())};
}

}  // namespace gww
