#pragma once

#include <cstddef>
#include <vector>

#include "gww/matrix.hpp"

namespace gww {

/// sum_l x_l * coeff[l], each coeff[l] a rows x cols constant matrix.
struct LinFormMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nvars = 0;
  std::vector<Matrix> coeff;

  LinFormMatrix() = default;
  LinFormMatrix(std::size_t rows, std::size_t cols, std::vector<Matrix> coeff);
  /// Entry (i, j) is the linear form with coefficients forms[i][j][l].
  static LinFormMatrix from_entries(const std::vector<std::vector<std::vector<Rational>>>& forms);

  /// Evaluation at a point v of K^{nvars}.
  Matrix operator()(const std::vector<Rational>& v) const;
};

/// Strictly increasing c-subsets of {0, ..., nvars-1} in lexicographic order.
std::vector<std::vector<int>> wedge_basis(std::size_t nvars, std::size_t c);

/// Matrix of linear forms on the c-th exterior power, one constant matrix per
/// wedge_basis element.
struct PlueckerLinearMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t c = 0;
  std::size_t nvars = 0;
  std::vector<Matrix> coeff;

  PlueckerLinearMatrix() = default;
  PlueckerLinearMatrix(std::size_t rows, std::size_t cols, std::size_t c, std::size_t nvars,
                       std::vector<Matrix> coeff);
  /// Coefficient matrix on e_J for a strictly increasing J.
  const Matrix& at(const std::vector<int>& j) const;
};

/// Product A_1 ... A_c in the tensor algebra, checked to be alternating.
/// The coefficient on e_{j1<...<jc} is the tensor coefficient of
/// x_{jc} (x) ... (x) x_{j1}, i.e. the factor from A_c is read first.
PlueckerLinearMatrix gamma_from_resolution(const std::vector<LinFormMatrix>& as);

/// sum over tau in S_c of sgn(tau) A_{tau(1)}(v_1) ... A_{tau(c)}(v_c) for
/// square, pairwise commuting A_i.
Matrix koszul_gamma(const std::vector<LinFormMatrix>& as, const std::vector<std::vector<Rational>>& vs);

/// sum_J w_J coeff(J), with w indexed like wedge_basis.
Matrix plucker_eval(const PlueckerLinearMatrix& l, const std::vector<Rational>& w);

/// 2x2 minors P_i Q_j - P_j Q_i of [P; Q] in wedge_basis order.
std::vector<Rational> plucker_line(const std::vector<Rational>& p, const std::vector<Rational>& q);

/// Resolution matrices A_1 (3x6) and A_2 (6x3) of the pushforward of O(2)
/// along the twisted cubic.
std::vector<LinFormMatrix> twisted_cubic_resolution();
/// Reference Chow matrix of the twisted cubic for that resolution.
PlueckerLinearMatrix twisted_cubic_gamma();
/// Symmetric Chow matrix for the elliptic curve y^2 = x^3 - x embedded by
/// (1, x, y, x^2), twisted by a 2-torsion bundle.
PlueckerLinearMatrix elliptic_lambda();

}  // namespace gww
