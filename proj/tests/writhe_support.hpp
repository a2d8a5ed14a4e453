#pragma once

#include <random>
#include <vector>

#include "gww/writhe.hpp"

namespace gww::testing {

inline RationalCurve standard_quartic() {
  return RationalCurve({BinaryForm(4, {1, 0, 0, 0, 0}), BinaryForm(4, {0, 1, 0, 0, 0}),
                        BinaryForm(4, {0, 0, 0, 1, 0}), BinaryForm(4, {0, 0, 0, 0, 1})});
}

/// Product of random elementary matrices; determinant 1.
inline Matrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  Matrix a = Matrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Matrix e = Matrix::identity(n);
    e(i, j) = small(rng);
    a = a * e;
  }
  return a;
}

/// Random curve of degree n with small integer coefficients; retries until
/// the forms define an embedding candidate.
inline RationalCurve random_curve(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> small(-3, 3);
  for (;;) {
    CurveForms f;
    for (auto& form : f) {
      std::vector<Rational> c;
      for (int k = 0; k <= n; ++k) c.emplace_back(small(rng));
      form = BinaryForm(n, std::move(c));
    }
    try {
      return RationalCurve(f);
    } catch (const MathError&) {
    }
  }
}

inline Point3 random_point3(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return {d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace gww::testing
