#include <doctest.h>

#include <random>

#include "gww/errors.hpp"
#include "gww/gw.hpp"

using namespace gww;

namespace {

GWClass cls(std::initializer_list<long> d) {
  std::vector<Rational> v;
  for (long a : d) v.emplace_back(a);
  return GWClass(v);
}

/// Isotropy of z^2 - a x^2 - b y^2 over Q_p for squarefree integers a, b.
/// A Z_p-primitive zero reduces mod p^3 (mod 32 at 2) to a primitive zero
/// with a coordinate satisfying e = v_p(2 c_i x_i) <= 1 (<= 2 at 2); such a
/// zero lifts by Hensel since 2e + 1 <= 3 (<= 5). So search exact zeros mod m.
int hilbert_oracle(long a, long b, long p) {
  const long m = p == 2 ? 32 : p * p * p;
  const int emax = p == 2 ? 2 : 1;
  auto mod = [m](long v) { return ((v % m) + m) % m; };
  auto val = [p, m](long v) {
    v = ((v % m) + m) % m;
    if (v == 0) return 99;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    return e;
  };
  std::vector<std::vector<long>> roots(static_cast<std::size_t>(m));
  for (long z = 0; z < m; ++z) roots[static_cast<std::size_t>(mod(z * z))].push_back(z);
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < m; ++y) {
      const long t = mod(a * x * x + b * y * y);
      for (long z : roots[static_cast<std::size_t>(t)]) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (val(2 * z) <= emax || val(2 * a * x) <= emax || val(2 * b * y) <= emax) return 1;
      }
    }
  }
  return -1;
}

bool squarefree(long v) {
  v = v < 0 ? -v : v;
  for (long d = 2; d * d <= v; ++d) {
    if (v % (d * d) == 0) return false;
  }
  return v != 0;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  for (;;) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) = d(rng);
    }
    if (determinant(p) != 0) return p;
  }
}

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-6, 6);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = make_rational(d(rng), 1 + static_cast<int>(rng() % 3));
    }
    if (determinant(m) != 0) return m;
  }
}

UniPoly random_poly(std::mt19937_64& rng, int deg, bool monic) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = d(rng);
  if (monic) c.back() = 1;
  return UniPoly(c);
}

}  // namespace

TEST_CASE("diagonalization examples") {
  const SymBilForm d(Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  const Diagonalization r = diagonalize(d);
  CHECK(r.diag == std::vector<Rational>{1, 2, 3});
  CHECK(r.transform == Matrix::identity(3));

  const SymBilForm h(Matrix{{0, 1}, {1, 0}});
  const Diagonalization rh = diagonalize(h);
  CHECK(squarefree_part(rh.diag[0] * rh.diag[1]) == -1);
  const Matrix p = rh.transform;
  CHECK(p.transpose() * h.matrix() * p == Matrix{{rh.diag[0], 0}, {0, rh.diag[1]}});

  const Diagonalization rp = diagonalize(SymBilForm(Matrix{{1, 2}, {2, 5}}));
  CHECK(squarefree_part(rp.diag[0]) == 1);
  CHECK(squarefree_part(rp.diag[1]) == 1);

  const Diagonalization rs = diagonalize(SymBilForm(Matrix{{0, 0, 0}, {0, 0, 2}, {0, 2, 0}}));
  CHECK(std::count(rs.diag.begin(), rs.diag.end(), Rational(0)) == 1);
}

TEST_CASE("non-symmetric and singular inputs are rejected") {
  CHECK_THROWS_AS(SymBilForm(Matrix{{1, 2}, {3, 4}}), MathError);
  try {
    gw_from_matrix(SymBilForm(Matrix{{1, 1}, {1, 1}}));
    FAIL("expected SingularForm");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::SingularForm);
  }
}

TEST_CASE("gw_from_matrix examples") {
  const GWClass anti = gw_from_matrix(SymBilForm(Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(gw_equal(anti, cls({1, 1, -1})));
  CHECK(gw_equal(gw_from_matrix(SymBilForm(Matrix{{7}})), cls({7})));
  CHECK(gw_equal(cls({28}), cls({7})));
}

TEST_CASE("hilbert symbol examples") {
  CHECK(hilbert_symbol(1, 17, Place::at(3)) == 1);
  CHECK(hilbert_symbol(-1, -1, Place::inf()) == -1);
  CHECK(hilbert_symbol(2, 5, Place::at(5)) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::at(2)) == -1);
  CHECK(hilbert_symbol(3, 3, Place::at(3)) == -1);
  CHECK_THROWS_AS(hilbert_symbol(0, 1, Place::at(3)), MathError);
}

TEST_CASE("hilbert symbol agrees with a brute-force isotropy search") {
  for (long p : {2L, 3L, 5L, 7L}) {
    const long range = p == 7 ? 12 : 30;
    for (long a = -range; a <= range; ++a) {
      if (!squarefree(a)) continue;
      for (long b = -range; b <= range; ++b) {
        if (!squarefree(b)) continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(p);
        CHECK(hilbert_symbol(a, b, Place::at(p)) == hilbert_oracle(a, b, p));
      }
    }
  }
}

TEST_CASE("hilbert symbol is symmetric, bimultiplicative and satisfies the product formula") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-200, 200);
  auto nz = [&] {
    long v = 0;
    while (v == 0) v = d(rng);
    return make_rational(v, 1 + static_cast<long>(rng() % 7));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = nz(), b1 = nz(), b2 = nz();
    std::set<Integer> primes{2};
    for (const Rational& x : {a, b1, b2}) {
      for (const auto& [p, e] : factor_integer(squarefree_part(x))) primes.insert(p);
    }
    int prod = hilbert_symbol(a, b1, Place::inf());
    for (const auto& p : primes) {
      const Place pl = Place::at(p);
      CHECK(hilbert_symbol(a, b1 * b2, pl) == hilbert_symbol(a, b1, pl) * hilbert_symbol(a, b2, pl));
      CHECK(hilbert_symbol(a, b1, pl) == hilbert_symbol(b1, a, pl));
      prod *= hilbert_symbol(a, b1, pl);
    }
    CHECK(prod == 1);
  }
}

TEST_CASE("invariants of small classes") {
  const GWInvariants h = gw_invariants(cls({1, -1}));
  CHECK(h.rank == 2);
  CHECK(h.signature == 0);
  CHECK(h.disc == -1);
  for (const auto& [p, v] : h.hasse) CHECK(v == 1);

  const GWInvariants t = gw_invariants(cls({3, 3}));
  CHECK(t.signature == 2);
  CHECK(t.disc == 1);
  CHECK(t.hasse.at(3) == -1);

  CHECK(gw_invariants(cls({-12})).disc == -3);
}

TEST_CASE("isometry decisions") {
  CHECK(gw_equal(cls({1, 1}), cls({2, 2})));
  CHECK_FALSE(gw_equal(cls({1, 1}), cls({3, 3})));
  CHECK_FALSE(gw_equal(cls({1, 1}), cls({1, -1})));
  CHECK(gw_equal(cls({1, -1}), cls({5, -5})));
  CHECK(gw_equal(cls({1, 1, 1}), cls({1, 2, 2})));
  CHECK_FALSE(gw_equal(cls({1}), cls({1, 1})));
}

TEST_CASE("congruence invariance") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix m = random_symmetric(rng, n);
    const Matrix p = random_invertible(rng, n);
    CHECK(gw_equal(gw_from_matrix(SymBilForm(m)), gw_from_matrix(SymBilForm(p.transpose() * m * p))));
  }
}

TEST_CASE("trace forms") {
  const NumberField q = NumberField::rationals();
  CHECK(gw_equal(trace_form(NFElem(q, Rational(5))), cls({5})));
  const NumberField gi(UniPoly{1, 0, 1});
  CHECK(trace_matrix(NFElem(gi, Rational(1))) == Matrix{{2, 0}, {0, -2}});
  CHECK(gw_equal(trace_form(NFElem(gi, Rational(1))), cls({2, -2})));
  const NumberField r2(UniPoly{-2, 0, 1});
  CHECK(trace_matrix(NFElem(r2, Rational(1))) == Matrix{{2, 0}, {0, 4}});
  CHECK(gw_equal(trace_form(NFElem(r2, Rational(1))), cls({2, 1})));
  CHECK_THROWS_AS(trace_form(NFElem(r2, Rational(0))), MathError);

  std::mt19937_64 rng(9);
  const NumberField f(UniPoly{-2, -1, 0, 1});
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const NFElem a(f, {Rational(d(rng)), Rational(d(rng)), Rational(d(rng) | 1)});
    const NFElem b(f, {Rational(d(rng) | 1), Rational(d(rng)), Rational(d(rng))});
    CHECK(gw_equal(trace_form(a * b * b), trace_form(a)));
  }
}

TEST_CASE("bezout and hankel examples") {
  CHECK(bezout_matrix(UniPoly{-3, 1}, UniPoly{7}, 1).matrix() == Matrix{{7}});
  const Matrix anti{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  CHECK(bezout_matrix(UniPoly{0, 0, 0, 1}, UniPoly{1}, 3).matrix() == anti);
  CHECK(bezout_matrix(UniPoly{-1, 0, 1}, UniPoly{0, 1}, 2).matrix() == Matrix::identity(2));
  CHECK(hankel_matrix(UniPoly{-3, 1}, UniPoly{7}, 1).matrix() == Matrix{{7}});
  CHECK(hankel_matrix(UniPoly{0, 0, 0, 1}, UniPoly{1}, 3).matrix() == anti);
  CHECK(hankel_matrix(UniPoly{0, -1, 0, 1}, UniPoly{1}, 3).matrix() == Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 1}});
  CHECK_THROWS_AS(bezout_matrix(UniPoly{0, 2}, UniPoly{1}, 1), MathError);
  CHECK_THROWS_AS(hankel_matrix(UniPoly{0, 1}, UniPoly{0, 1}, 1), MathError);
}

TEST_CASE("hankel and bezout matrices are equivalent") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const UniPoly f = random_poly(rng, n, true);
    const UniPoly g = random_poly(rng, n - 1, false);
    const SymBilForm h = hankel_matrix(f, g, n);
    const SymBilForm b = bezout_matrix(f, g, n);
    const Rational dh = determinant(h.matrix());
    CHECK(dh == determinant(b.matrix()));
    CHECK((dh != 0) == (resultant(f, g) != 0));
    if (dh != 0) CHECK(gw_equal(gw_from_matrix(h), gw_from_matrix(b)));
  }
}
