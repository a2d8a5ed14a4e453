#include "modp.hpp"

#include <algorithm>

#include "gww/errors.hpp"

namespace gww::modp {

u64 inv(u64 a, u64 p) {
  // p is prime: a^(p-2).
  u64 result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = modp::add(out[i], b[i], p);
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = modp::sub(out[i], b[i], p);
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly scale(const Poly& a, u64 s, u64 p) {
  Poly out = a;
  for (auto& c : out) c = mul(c, s, p);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "mod-p polynomial division by zero");
  Poly r = a;
  trim(r);
  if (deg(r) < deg(b)) return {Poly{}, r};
  Poly q(static_cast<std::size_t>(deg(r) - deg(b)) + 1, 0);
  const u64 inv_lc = inv(b.back(), p);
  for (int i = deg(r); i >= deg(b); --i) {
    const u64 c = mul(r[static_cast<std::size_t>(i)], inv_lc, p);
    q[static_cast<std::size_t>(i - deg(b))] = c;
    if (!c) continue;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = r[static_cast<std::size_t>(i - deg(b) + j)];
      slot = modp::sub(slot, mul(c, b[static_cast<std::size_t>(j)], p), p);
    }
  }
  r.resize(static_cast<std::size_t>(deg(b)));
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) fail(ErrorKind::InvalidArgument, "bezout of non-coprime polynomials");
  const u64 c = inv(r0[0], p);
  return {scale(s0, c, p), scale(t0, c, p)};
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p, p);
  trim(d);
  return d;
}

Poly powmod(Poly base, const Integer& exponent, const Poly& modulus, u64 p) {
  Poly result{1};
  base = rem(base, modulus, p);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), modulus, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = rem(mul(result, base, p), modulus, p);
  }
  return result;
}

Poly reduce(const std::vector<Integer>& f, u64 p) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

namespace {

void equal_degree_split(const Poly& f, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  const Integer exponent = (ipow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(deg(f)));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly g = gcd(a, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    Poly b = sub(powmod(a, exponent, f, p), Poly{1}, p);
    g = gcd(b, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(monic(divmod(f, g, p).first, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly g = monic(f, p);
  Poly h{0, 1};
  const Poly x{0, 1};
  for (int i = 1; deg(g) >= 2 * i; ++i) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), g, p);
    Poly d = gcd(g, sub(h, x, p), p);
    if (deg(d) > 0) {
      equal_degree_split(d, i, p, rng, out);
      g = divmod(g, d, p).first;
      h = rem(h, g, p);
    }
  }
  if (deg(g) > 0) out.push_back(monic(g, p));
  return out;
}

}  // namespace gww::modp
