#pragma once

#include <random>
#include <vector>

#include "gww/chow.hpp"
#include "gww/unipoly.hpp"

namespace gww::testing {

inline std::vector<Rational> cubic_point(const Rational& s, const Rational& t) {
  return {s * s * s, s * s * t, s * t * t, t * t * t};
}

/// Whether the line through P and Q meets the twisted cubic: some point
/// phi(s:t) makes every 3x3 minor of [P; Q; phi(s:t)] vanish.
inline bool line_meets_twisted_cubic(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  // Minor on columns (a,b,c) as a cubic in t along phi(1:t).
  const UniPoly t = UniPoly::x();
  const std::vector<UniPoly> phi = {UniPoly{1}, t, t * t, t * t * t};
  UniPoly g;
  const std::vector<Rational> inf = cubic_point(0, 1);
  bool inf_on_all = true;
  const int cols[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& c : cols) {
    auto minor2 = [&](std::size_t i, std::size_t j) -> Rational { return p[i] * q[j] - p[j] * q[i]; };
    const auto a = static_cast<std::size_t>(c[0]), b = static_cast<std::size_t>(c[1]), d = static_cast<std::size_t>(c[2]);
    // Laplace expansion along the third row.
    const UniPoly m = minor2(b, d) * phi[a] - minor2(a, d) * phi[b] + minor2(a, b) * phi[d];
    g = poly_gcd(g, m);
    if (minor2(b, d) * inf[a] - minor2(a, d) * inf[b] + minor2(a, b) * inf[d] != 0) inf_on_all = false;
  }
  return inf_on_all || g.is_zero() || g.degree() >= 1;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return {d(rng), d(rng), d(rng), d(rng)};
}

/// Random commuting family of the form A_i = s_i I - B_i, with s = P x and
/// B_i built from powers of one nilpotent-free matrix in s_0..s_k, together
/// with the dual vectors s_{k+1}^v, ..., s_n^v written in x-coordinates.
struct KoszulFamily {
  std::vector<LinFormMatrix> as;
  std::vector<std::vector<Rational>> duals;
};

inline KoszulFamily koszul_family(std::mt19937_64& rng, std::size_t d, std::size_t c, std::size_t k) {
  const std::size_t n = k + c + 1;  // number of variables
  std::uniform_int_distribution<int> small(-3, 3);
  Matrix p(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) = small(rng);
    }
  } while (determinant(p) == 0);
  Matrix nm(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) nm(i, j) = small(rng);
  }
  const std::vector<Matrix> powers = {Matrix::identity(d), nm, nm * nm};
  KoszulFamily fam;
  for (std::size_t i = 0; i < c; ++i) {
    // Coefficients on s_0 .. s_{n-1}.
    std::vector<Matrix> in_s(n, Matrix(d, d));
    in_s[k + 1 + i] = Matrix::identity(d);
    for (std::size_t l = 0; l <= k; ++l) {
      for (const auto& pw : powers) in_s[l] = in_s[l] - Rational(small(rng)) * pw;
    }
    // s_m = sum_l P(m,l) x_l
    std::vector<Matrix> in_x(n, Matrix(d, d));
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t l = 0; l < n; ++l) {
        if (p(m, l) != 0) in_x[l] += p(m, l) * in_s[m];
      }
    }
    fam.as.emplace_back(d, d, std::move(in_x));
  }
  const Matrix pinv = inverse(p);
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<Rational> v(n);
    for (std::size_t l = 0; l < n; ++l) v[l] = pinv(l, k + 1 + i);
    fam.duals.push_back(v);
  }
  return fam;
}

}  // namespace gww::testing
