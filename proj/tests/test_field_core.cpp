#include <doctest.h>

#include <random>

#include "gww/errors.hpp"
#include "gww/factor.hpp"
#include "gww/matrix.hpp"
#include "gww/rational.hpp"
#include "gww/unipoly.hpp"

using namespace gww;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = d(rng);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

std::vector<UniPoly> monic_factors(const Factorization& f) {
  std::vector<UniPoly> out;
  for (const auto& [p, e] : f.factors) {
    for (unsigned i = 0; i < e; ++i) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 17 ") == 17);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), MathError);
  CHECK_THROWS_AS(parse_rational("abc"), MathError);
  CHECK_THROWS_AS(parse_rational(""), MathError);
}

TEST_CASE("integer factorization and square classes") {
  const Integer n = Integer(10403) * 1000003 * 999983;
  const auto f = factor_integer(n);
  CHECK(f.size() == 4);
  CHECK(f.at(101) == 1);
  CHECK(f.at(103) == 1);
  CHECK(f.at(999983) == 1);
  CHECK(f.at(1000003) == 1);
  CHECK(squarefree_part(Rational(-12, 5)) == -15);
  CHECK(squarefree_part(Rational(18)) == 2);
  CHECK(is_kth_power_class(Rational(32), Rational(2), 4));
  CHECK_FALSE(is_kth_power_class(Rational(16), Rational(2), 4));
  CHECK(is_kth_power_class(Rational(-81, 16), Rational(-1), 4));
  CHECK_FALSE(is_kth_power_class(Rational(-81, 16), Rational(1), 4));
  CHECK(is_kth_power_class(Rational(-8), Rational(1), 3));
}

TEST_CASE("factorization past the rho budget") {
  // Two 20-digit primes and a cube of an 11-digit prime.
  const Integer p("10000000000000000051"), q("64811511862641887611"), r("110978854313");
  const auto f = factor_integer(p * q * r * r * r);
  CHECK(f.size() == 3);
  CHECK(f.at(p) == 1);
  CHECK(f.at(q) == 1);
  CHECK(f.at(r) == 3);
}

TEST_CASE("determinant, rank and inverse") {
  const Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(determinant(m) == 18);
  CHECK(inverse(m) * m == Matrix::identity(3));
  const Matrix s{{1, 2}, {2, 4}};
  CHECK(rank(s) == 1);
  CHECK_THROWS_AS(inverse(s), MathError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  CHECK(resultant(UniPoly{5, -2, 0, 1}, UniPoly{-1, 3, 7}) == 9444);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    const UniPoly f = random_poly(rng, m, 9);
    const UniPoly g = random_poly(rng, n, 9);
    CHECK(resultant(f, g) == determinant(sylvester_matrix(f, g, m, n)));
  }
}

TEST_CASE("gcd and extended gcd") {
  const UniPoly a = UniPoly{-1, 0, 1} * UniPoly{2, 1};
  const UniPoly b = UniPoly{-1, 0, 1} * UniPoly{3, 0, 1};
  CHECK(poly_gcd(a, b) == UniPoly{-1, 0, 1});
  const ExtGcd e = poly_ext_gcd(a, b);
  CHECK(e.s * a + e.t * b == e.gcd);
  CHECK(poly_gcd(UniPoly{}, UniPoly{}).is_zero());
}

TEST_CASE("interpolation recovers a polynomial") {
  const UniPoly f{3, -1, 0, Rational(2, 3)};
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.emplace_back(i * 2 - 3);
    ys.push_back(f(xs.back()));
  }
  CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("bezoutian of x^2 and x") {
  // (x^2 y - y^2 x)/(x - y) = xy
  const Matrix b = bezoutian(UniPoly{0, 0, 1}, UniPoly{0, 1}, 2);
  CHECK(b == Matrix{{0, 0}, {0, 1}});
}

TEST_CASE("factorization matches frozen sympy results") {
  const UniPoly x = UniPoly::x();
  {
    const Factorization f = factor_rational(UniPoly{1, 0, 0, 0, 1});
    REQUIRE(f.factors.size() == 1);
    CHECK(is_irreducible(UniPoly{1, 0, 0, 0, 1}));
  }
  {
    const UniPoly p{-18, 6, 25, -29, 16, 5, -12, 4};
    const Factorization f = factor_rational(p);
    CHECK(f.leading == 4);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].first == UniPoly{Rational(-3, 2), 1});
    CHECK(f.factors[0].second == 2);
    CHECK(f.factors[1].first == UniPoly{-2, 0, 1});
    CHECK(f.factors[2].first == UniPoly{1, 1, 0, 1});
    CHECK(f.expand() == p);
  }
  {
    const Factorization f = factor_rational(pow(x, 12) - UniPoly{1});
    CHECK(f.factors.size() == 6);
    CHECK(f.factors.back().first == UniPoly{1, 0, -1, 0, 1});
  }
  {
    const Factorization f = factor_rational(pow(x, 8) - UniPoly{16});
    CHECK(f.factors.size() == 4);
    for (const auto& [q, e] : f.factors) CHECK(q.degree() == 2);
  }
  {
    const Factorization f = factor_rational(UniPoly{4, 0, -17, 0, 4});
    CHECK(f.factors.size() == 4);
  }
  // Splits into linear or quadratic factors modulo every prime.
  CHECK(is_irreducible(UniPoly{1, 0, -10, 0, 1}));
  CHECK(is_irreducible(UniPoly{-5, 2}));
  CHECK_FALSE(is_irreducible(UniPoly{-1, 0, 1}));
}

TEST_CASE("factorization round-trips random products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly p = UniPoly::constant(Rational(static_cast<long>(rng() % 5) + 1));
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < parts; ++i) p *= random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
    const Factorization f = factor_rational(p);
    CHECK(f.expand() == p);
    for (const auto& q : monic_factors(f)) CHECK(is_irreducible(q));
  }
}

TEST_CASE("squarefree decomposition") {
  const UniPoly a{1, 1};
  const UniPoly b{-2, 0, 1};
  const auto sq = squarefree_decomposition(a * pow(b, 3));
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == a);
  CHECK(sq[1] == UniPoly{1});
  CHECK(sq[2] == b);
}
