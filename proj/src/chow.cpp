#include "gww/chow.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "gww/errors.hpp"

namespace gww {

LinFormMatrix::LinFormMatrix(std::size_t r, std::size_t c, std::vector<Matrix> co)
    : rows(r), cols(c), nvars(co.size()), coeff(std::move(co)) {
  for (const auto& m : coeff) {
    if (m.rows() != rows || m.cols() != cols) fail(ErrorKind::ShapeMismatch, "coefficient matrix has the wrong shape");
  }
}

LinFormMatrix LinFormMatrix::from_entries(const std::vector<std::vector<std::vector<Rational>>>& forms) {
  if (forms.empty() || forms[0].empty()) fail(ErrorKind::ShapeMismatch, "empty matrix of linear forms");
  const std::size_t r = forms.size(), c = forms[0].size(), n = forms[0][0].size();
  std::vector<Matrix> co(n, Matrix(r, c));
  for (std::size_t i = 0; i < r; ++i) {
    if (forms[i].size() != c) fail(ErrorKind::ShapeMismatch, "ragged matrix of linear forms");
    for (std::size_t j = 0; j < c; ++j) {
      if (forms[i][j].size() != n) fail(ErrorKind::ShapeMismatch, "linear forms in different numbers of variables");
      for (std::size_t l = 0; l < n; ++l) co[l](i, j) = forms[i][j][l];
    }
  }
  return LinFormMatrix(r, c, std::move(co));
}

Matrix LinFormMatrix::operator()(const std::vector<Rational>& v) const {
  if (v.size() != nvars) fail(ErrorKind::ShapeMismatch, "evaluation point has the wrong length");
  Matrix out(rows, cols);
  for (std::size_t l = 0; l < nvars; ++l) {
    if (sgn(v[l]) != 0) out += v[l] * coeff[l];
  }
  return out;
}

std::vector<std::vector<int>> wedge_basis(std::size_t nvars, std::size_t c) {
  std::vector<std::vector<int>> out;
  if (c > nvars) return out;
  std::vector<int> j(c);
  std::iota(j.begin(), j.end(), 0);
  const int n = static_cast<int>(nvars);
  for (;;) {
    out.push_back(j);
    int i = static_cast<int>(c) - 1;
    while (i >= 0 && j[static_cast<std::size_t>(i)] == n - static_cast<int>(c) + i) --i;
    if (i < 0) break;
    ++j[static_cast<std::size_t>(i)];
    for (auto k = static_cast<std::size_t>(i) + 1; k < c; ++k) j[k] = j[k - 1] + 1;
  }
  return out;
}

PlueckerLinearMatrix::PlueckerLinearMatrix(std::size_t r, std::size_t cl, std::size_t cc, std::size_t n,
                                           std::vector<Matrix> co)
    : rows(r), cols(cl), c(cc), nvars(n), coeff(std::move(co)) {
  if (coeff.size() != wedge_basis(nvars, c).size()) fail(ErrorKind::ShapeMismatch, "one matrix per wedge basis element required");
  for (const auto& m : coeff) {
    if (m.rows() != rows || m.cols() != cols) fail(ErrorKind::ShapeMismatch, "coefficient matrix has the wrong shape");
  }
}

const Matrix& PlueckerLinearMatrix::at(const std::vector<int>& j) const {
  const auto basis = wedge_basis(nvars, c);
  const auto it = std::find(basis.begin(), basis.end(), j);
  if (it == basis.end()) fail(ErrorKind::InvalidArgument, "not a strictly increasing wedge index");
  return coeff[static_cast<std::size_t>(it - basis.begin())];
}

namespace {

/// Matrix whose entries are dense tensors in nvars^degree coordinates; the
/// first tensor factor is the most significant digit of the flat index.
struct TensorMatrix {
  std::size_t rows, cols, nvars, degree;
  std::vector<std::vector<Rational>> entries;  // rows*cols, each nvars^degree

  std::vector<Rational>& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const std::vector<Rational>& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

TensorMatrix from_linear(const LinFormMatrix& a) {
  TensorMatrix t{a.rows, a.cols, a.nvars, 1, {}};
  t.entries.assign(a.rows * a.cols, std::vector<Rational>(a.nvars));
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      for (std::size_t l = 0; l < a.nvars; ++l) t.at(i, j)[l] = a.coeff[l](i, j);
    }
  }
  return t;
}

TensorMatrix tensor_multiply(const TensorMatrix& t, const LinFormMatrix& a) {
  TensorMatrix out{t.rows, a.cols, t.nvars, t.degree + 1, {}};
  const std::size_t size = ipow(t.nvars, out.degree);
  out.entries.assign(out.rows * out.cols, std::vector<Rational>(size));
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      auto& dst = out.at(i, j);
      for (std::size_t k = 0; k < t.cols; ++k) {
        const auto& left = t.at(i, k);
        for (std::size_t l = 0; l < a.nvars; ++l) {
          const Rational& r = a.coeff[l](k, j);
          if (sgn(r) == 0) continue;
          for (std::size_t f = 0; f < left.size(); ++f) {
            if (sgn(left[f]) != 0) dst[f * t.nvars + l] += left[f] * r;
          }
        }
      }
    }
  }
  return out;
}

std::vector<int> digits(std::size_t flat, std::size_t base, std::size_t len) {
  std::vector<int> d(len);
  for (std::size_t k = len; k-- > 0;) {
    d[k] = static_cast<int>(flat % base);
    flat /= base;
  }
  return d;
}

/// Sign of the permutation sorting d (which has distinct entries).
int sort_sign(std::vector<int> d) {
  int s = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] > d[j]) s = -s;
    }
  }
  return s;
}

}  // namespace

PlueckerLinearMatrix gamma_from_resolution(const std::vector<LinFormMatrix>& as) {
  if (as.empty()) fail(ErrorKind::InvalidArgument, "empty resolution");
  const std::size_t n = as[0].nvars;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i].nvars != n) fail(ErrorKind::ShapeMismatch, "resolution matrices in different numbers of variables");
    if (i + 1 < as.size() && as[i].cols != as[i + 1].rows) fail(ErrorKind::ShapeMismatch, "resolution matrices do not chain");
  }
  TensorMatrix t = from_linear(as[0]);
  for (std::size_t i = 1; i < as.size(); ++i) t = tensor_multiply(t, as[i]);

  const std::size_t c = as.size();
  const auto basis = wedge_basis(n, c);
  std::vector<Matrix> coeff(basis.size(), Matrix(t.rows, t.cols));
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < t.cols; ++j) {
      const auto& e = t.at(i, j);
      for (std::size_t f = 0; f < e.size(); ++f) {
        const std::vector<int> d = digits(f, n, c);
        std::vector<int> sorted = d;
        std::sort(sorted.begin(), sorted.end());
        const bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
        if (repeated) {
          if (sgn(e[f]) != 0) fail(ErrorKind::NotAlternating, "product has a nonzero coefficient on a repeated index");
          continue;
        }
        // Every tensor coefficient is sgn * coefficient of the descending tuple.
        std::vector<int> desc(sorted.rbegin(), sorted.rend());
        std::size_t flat_desc = 0;
        for (int x : desc) flat_desc = flat_desc * n + static_cast<std::size_t>(x);
        const int rel = sort_sign(d) * sort_sign(desc);
        if (e[f] != rel * e[flat_desc]) fail(ErrorKind::NotAlternating, "product is not alternating");
      }
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::size_t flat_desc = 0;
        for (auto it = basis[b].rbegin(); it != basis[b].rend(); ++it) flat_desc = flat_desc * n + static_cast<std::size_t>(*it);
        coeff[b](i, j) = e[flat_desc];
      }
    }
  }
  return PlueckerLinearMatrix(t.rows, t.cols, c, n, std::move(coeff));
}

Matrix koszul_gamma(const std::vector<LinFormMatrix>& as, const std::vector<std::vector<Rational>>& vs) {
  const std::size_t c = as.size();
  if (c == 0) fail(ErrorKind::InvalidArgument, "empty matrix family");
  if (vs.size() != c) fail(ErrorKind::ShapeMismatch, "need one vector per matrix");
  const std::size_t d = as[0].rows;
  for (const auto& a : as) {
    if (a.rows != d || a.cols != d) fail(ErrorKind::ShapeMismatch, "Koszul matrices must be square of equal size");
  }
  // ev[i][m] = A_i(v_m)
  std::vector<std::vector<Matrix>> ev(c);
  for (std::size_t i = 0; i < c; ++i) {
    for (const auto& v : vs) ev[i].push_back(as[i](v));
  }
  // Polarized commutation on the span of the supplied vectors.
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      for (std::size_t m = 0; m < c; ++m) {
        for (std::size_t k = m; k < c; ++k) {
          const Matrix lhs = ev[i][m] * ev[j][k] + ev[i][k] * ev[j][m];
          const Matrix rhs = ev[j][m] * ev[i][k] + ev[j][k] * ev[i][m];
          if (!(lhs == rhs)) fail(ErrorKind::NonCommuting, "matrices A_i, A_j do not commute on the given vectors");
        }
      }
    }
  }
  std::vector<std::size_t> tau(c);
  std::iota(tau.begin(), tau.end(), 0);
  Matrix out(d, d);
  do {
    std::vector<int> t(tau.begin(), tau.end());
    Matrix prod = ev[tau[0]][0];
    for (std::size_t m = 1; m < c; ++m) prod = prod * ev[tau[m]][m];
    out += Rational(sort_sign(t)) * prod;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

Matrix plucker_eval(const PlueckerLinearMatrix& l, const std::vector<Rational>& w) {
  if (w.size() != l.coeff.size()) fail(ErrorKind::ShapeMismatch, "Pluecker vector has the wrong length");
  Matrix out(l.rows, l.cols);
  for (std::size_t b = 0; b < w.size(); ++b) {
    if (sgn(w[b]) != 0) out += w[b] * l.coeff[b];
  }
  return out;
}

std::vector<Rational> plucker_line(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.size() != q.size()) fail(ErrorKind::ShapeMismatch, "points of different dimensions");
  std::vector<Rational> out;
  for (const auto& j : wedge_basis(p.size(), 2)) {
    const auto a = static_cast<std::size_t>(j[0]), b = static_cast<std::size_t>(j[1]);
    out.emplace_back(p[a] * q[b] - p[b] * q[a]);
  }
  return out;
}

namespace {

/// Builds a matrix of linear forms from entries written as variable indices
/// with signs: +k+1 means x_k, -(k+1) means -x_k, 0 means zero.
LinFormMatrix signed_var_matrix(const std::vector<std::vector<int>>& e, std::size_t nvars) {
  const std::size_t r = e.size(), c = e[0].size();
  std::vector<Matrix> co(nvars, Matrix(r, c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const int v = e[i][j];
      if (v != 0) co[static_cast<std::size_t>(std::abs(v) - 1)](i, j) = v > 0 ? 1 : -1;
    }
  }
  return LinFormMatrix(r, c, std::move(co));
}

/// Entry given as a list of (sign, i, j) terms +-x_ij.
using PlTerm = std::tuple<int, int, int>;

PlueckerLinearMatrix pl_matrix(const std::vector<std::vector<std::vector<PlTerm>>>& e) {
  const std::size_t r = e.size(), c = e[0].size();
  const auto basis = wedge_basis(4, 2);
  std::vector<Matrix> co(basis.size(), Matrix(r, c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      for (const auto& [s, a, b] : e[i][j]) {
        const auto it = std::find(basis.begin(), basis.end(), std::vector<int>{a, b});
        co[static_cast<std::size_t>(it - basis.begin())](i, j) += s;
      }
    }
  }
  return PlueckerLinearMatrix(r, c, 2, 4, std::move(co));
}

}  // namespace

std::vector<LinFormMatrix> twisted_cubic_resolution() {
  const LinFormMatrix a1 = signed_var_matrix({{-2, -3, -3, -4, -4, 0},
                                              {1, 0, 2, 0, 3, -4},
                                              {0, 1, 0, 2, 0, 3}},
                                             4);
  // Written transposed, as 3x6.
  const std::vector<std::vector<int>> a2t = {{-3, 2, 0, -1, 1, 0},
                                             {-4, 3, -3, 0, 2, -1},
                                             {0, 0, 4, -3, 0, 2}};
  std::vector<std::vector<int>> a2(6, std::vector<int>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 6; ++j) a2[j][i] = a2t[i][j];
  }
  return {a1, signed_var_matrix(a2, 4)};
}

PlueckerLinearMatrix twisted_cubic_gamma() {
  return pl_matrix({{{{-1, 1, 2}}, {{-1, 1, 3}}, {{1, 2, 3}}},
                    {{{1, 0, 2}}, {{1, 1, 2}, {1, 0, 3}}, {{-1, 1, 3}}},
                    {{{-1, 0, 1}}, {{-1, 0, 2}}, {{1, 1, 2}}}});
}

PlueckerLinearMatrix elliptic_lambda() {
  const std::vector<PlTerm> m01 = {{1, 2, 3}, {-1, 1, 2}, {-1, 0, 2}};
  std::vector<PlTerm> m00 = {{-1, 2, 3}, {1, 1, 2}, {1, 0, 2}};
  return pl_matrix({{m00, m01, {{1, 1, 3}, {1, 0, 3}}, {{1, 0, 3}, {1, 0, 1}}},
                    {m01, {{1, 1, 2}, {1, 0, 2}}, {{-1, 0, 3}}, {{-1, 0, 1}}},
                    {{{1, 1, 3}, {1, 0, 3}}, {{-1, 0, 3}}, {{1, 2, 3}, {1, 1, 2}}, {{1, 0, 2}}},
                    {{{1, 0, 3}, {1, 0, 1}}, {{-1, 0, 1}}, {{1, 0, 2}}, {{1, 0, 2}}}});
}

}  // namespace gww
