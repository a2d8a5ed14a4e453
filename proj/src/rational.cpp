#include "gww/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <vector>

#include "gww/errors.hpp"

namespace gww {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto valid_int = [](std::string_view v) {
    if (v.empty()) return false;
    std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto to_int = [](std::string v) {
    if (!v.empty() && v[0] == '+') v.erase(0, 1);
    return Integer(v, 10);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) fail(ErrorKind::ParseError, "not a rational literal: '" + s + "'");
    return Rational(to_int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorKind::ParseError, "not a rational literal: '" + s + "'");
  return make_rational(to_int(num), to_int(den));
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
    return pow(Rational(1) / base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

namespace {

Integer mulmod(const Integer& a, const Integer& b, const Integer& n) {
  Integer r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Returns a nontrivial factor of the odd composite n, or 0 once the iteration
// budget is spent.
Integer pollard_brent(const Integer& n, unsigned long budget) {
  for (unsigned long c = 1; c <= 3; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1, spent = 0;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x - y, n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      spent += 2 * r;
      r *= 2;
    } while (g == 1 && spent < budget);
    if (g == 1) return 0;
    if (g == n) {
      do {
        ys = f(ys);
        const Integer diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

// Elliptic-curve factoring on Montgomery curves By^2 = x^3 + Ax^2 + x with
// x-only projective arithmetic; a24 = (A + 2) / 4.
struct XZ {
  Integer x, z;
};

struct Montgomery {
  const Integer& n;
  Integer a24;

  XZ dbl(const XZ& p) const {
    const Integer s = mulmod(p.x + p.z, p.x + p.z, n);
    const Integer d = mulmod(p.x - p.z, p.x - p.z, n);
    const Integer t = s - d;
    return {mulmod(s, d, n), mulmod(t, d + mulmod(a24, t, n), n)};
  }

  XZ add(const XZ& p, const XZ& q, const XZ& diff) const {
    const Integer u = mulmod(p.x - p.z, q.x + q.z, n);
    const Integer v = mulmod(p.x + p.z, q.x - q.z, n);
    return {mulmod(diff.z, mulmod(u + v, u + v, n), n), mulmod(diff.x, mulmod(u - v, u - v, n), n)};
  }

  XZ mul(const XZ& p, const Integer& k) const {
    if (k == 1) return p;
    XZ r0 = p, r1 = dbl(p);
    for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
      if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r1, r0, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }
};

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

// One curve with Suyama parameter sigma. Returns a divisor of n greater than
// one (possibly n itself), or 1 when the curve finds nothing.
Integer ecm_curve(const Integer& n, unsigned long sigma, unsigned long b1,
                  const std::vector<unsigned long>& primes) {
  const Integer u = mulmod(Integer(sigma), Integer(sigma), n) - 5;
  const Integer v = 4 * Integer(sigma);
  const Integer u3 = mulmod(mulmod(u, u, n), u, n);
  const Integer v3 = mulmod(mulmod(v, v, n), v, n);
  const Integer vu = v - u;
  const Integer num = mulmod(mulmod(mulmod(vu, vu, n), vu, n), 3 * u + v, n);
  Integer den = mulmod(16 * u3, v, n);
  Integer g;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
  if (g != 1) return g;
  mpz_invert(den.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
  const Montgomery curve{n, mulmod(num, den, n)};

  XZ q{u3, v3};
  for (const unsigned long p : primes) {
    if (p > b1) break;
    unsigned long pe = p;
    while (pe <= b1 / p) pe *= p;
    q = curve.mul(q, Integer(pe));
  }
  mpz_gcd(g.get_mpz_t(), q.z.get_mpz_t(), n.get_mpz_t());
  if (g != 1) return g;

  // Stage 2 up to 100 b1: any prime l = iD +- j with j odd, coprime to D,
  // makes x(iD q) = x(j q) modulo the hidden factor.
  const unsigned long d = 2310;
  std::vector<XZ> baby;
  const XZ q2 = curve.dbl(q);
  XZ at = q, ahead = curve.add(q2, q, q);
  for (unsigned long j = 1; j < d / 2; j += 2) {
    if (std::gcd(j, d) == 1) baby.push_back(at);
    XZ next = curve.add(ahead, q2, at);
    at = std::move(ahead);
    ahead = std::move(next);
  }
  const XZ step = curve.mul(q, Integer(d));
  const unsigned long i0 = std::max<unsigned long>(1, b1 / d);
  XZ g_cur = curve.mul(q, Integer(i0 * d));
  XZ g_prev = i0 > 1 ? curve.mul(q, Integer((i0 - 1) * d)) : XZ{};
  Integer acc = 1;
  for (unsigned long i = i0; i * d <= 100 * b1; ++i) {
    for (const XZ& s : baby) acc = mulmod(acc, mulmod(g_cur.x, s.z, n) - mulmod(s.x, g_cur.z, n), n);
    const XZ g_next = i == 1 ? curve.dbl(step) : curve.add(g_cur, step, g_prev);
    g_prev = g_cur;
    g_cur = g_next;
  }
  mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
  return g;
}

Integer ecm(const Integer& n) {
  static const std::vector<unsigned long> primes = primes_up_to(3000000);
  unsigned long sigma = 6;
  const std::pair<unsigned long, int> schedule[] = {
      {2000, 25}, {11000, 90}, {50000, 300}, {250000, 700}, {1000000, 1800}, {3000000, 5000}};
  for (const auto& [b1, curves] : schedule) {
    for (int c = 0; c < curves; ++c, ++sigma) {
      const Integer g = ecm_curve(n, sigma, b1, primes);
      if (g != 1 && g != n) return g;
    }
  }
  fail(ErrorKind::InvalidArgument, "could not factor " + n.get_str());
}

Integer split(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const Integer d = pollard_brent(n, 200000);
  return d != 0 ? d : ecm(n);
}

// Large primes found so far. Trace forms and Gram-Schmidt pivots reuse the
// same big primes across numerators and denominators, so dividing by known
// primes first usually leaves nothing for Pollard-Brent.
std::set<Integer>& known_primes() {
  thread_local std::set<Integer> primes;
  return primes;
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out, unsigned mult) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out[n] += mult;
    known_primes().insert(n);
    return;
  }
  for (unsigned long k = 2; k <= 64; ++k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      factor_rec(root, out, mult * static_cast<unsigned>(k));
      return;
    }
    if (root < 2) break;
  }
  const Integer d = split(n);
  const Integer g = gcd(d, n / d);
  if (g > 1) {
    factor_rec(g, out, mult);
    factor_rec(n / g, out, mult);
    return;
  }
  factor_rec(d, out, mult);
  factor_rec(n / d, out, mult);
}

}  // namespace

std::map<Integer, unsigned> factor_integer(const Integer& n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cannot factor zero");
  std::map<Integer, unsigned> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  for (const auto& p : known_primes()) {
    if (m == 1) break;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      ++out[p];
      m /= p;
    }
  }
  if (m > 1) factor_rec(m, out, 1);
  return out;
}

Integer squarefree_part(const Rational& a) {
  if (sgn(a) == 0) fail(ErrorKind::InvalidArgument, "square class of zero");
  Integer out = sgn(a) < 0 ? -1 : 1;
  std::map<Integer, unsigned> exps = factor_integer(a.get_num());
  for (const auto& [p, e] : factor_integer(a.get_den())) exps[p] += e;
  for (const auto& [p, e] : exps)
    if (e % 2 == 1) out *= p;
  return out;
}

bool is_perfect_power(const Integer& n, unsigned k) {
  if (k == 1) return true;
  if (n < 0) {
    if (k % 2 == 0) return false;
    return is_perfect_power(-n, k);
  }
  Integer root;
  return mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

bool is_kth_power_class(const Rational& a, const Rational& b, unsigned k) {
  if (sgn(a) == 0 || sgn(b) == 0)
    fail(ErrorKind::InvalidArgument, "power class of zero");
  if (k == 0) fail(ErrorKind::InvalidArgument, "k must be positive");
  const Rational ratio = a / b;
  return is_perfect_power(ratio.get_num(), k) && is_perfect_power(ratio.get_den(), k);
}

}  // namespace gww
