#include "gww/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gww/errors.hpp"
#include "modp.hpp"

namespace gww {

namespace {

using ZPoly = std::vector<Integer>;

// Primitive integer polynomial with positive leading coefficient, same roots as f.
ZPoly primitive_integer(const UniPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

UniPoly to_unipoly(const ZPoly& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& c : f) v.emplace_back(c);
  return UniPoly(std::move(v));
}

Integer symmetric_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (auto& c : out) c = symmetric_mod(c, m);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

ZPoly lift_modp(const modp::Poly& f) {
  ZPoly out;
  for (auto c : f) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

ZPoly axpy(const ZPoly& y, const Integer& a, const modp::Poly& x) {
  ZPoly out = y;
  if (out.size() < x.size()) out.resize(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * static_cast<unsigned long>(x[i]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Lifts target = f*h (mod p), f monic, to a factorization modulo p^k.
std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& target, const modp::Poly& f, const modp::Poly& h,
                                   modp::u64 p, unsigned k) {
  const auto [s, t] = modp::bezout(f, h, p);
  ZPoly big_f = lift_modp(f), big_h = lift_modp(h);
  Integer pj = static_cast<unsigned long>(p);
  for (unsigned j = 1; j < k; ++j) {
    ZPoly prod(std::max(target.size(), big_f.size() + big_h.size()), 0);
    for (std::size_t i = 0; i < big_f.size(); ++i)
      for (std::size_t l = 0; l < big_h.size(); ++l) prod[i + l] += big_f[i] * big_h[l];
    ZPoly err(prod.size(), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      const Integer ti = i < target.size() ? target[i] : Integer(0);
      err[i] = (ti - prod[i]) / pj;  // exact by the invariant F*H = target mod p^j
    }
    const modp::Poly e = modp::reduce(err, p);
    const auto [q, df] = modp::divmod(modp::mul(t, e, p), f, p);
    const modp::Poly dh = modp::add(modp::mul(s, e, p), modp::mul(q, h, p), p);
    big_f = axpy(big_f, pj, df);
    big_h = axpy(big_h, pj, dh);
    pj *= static_cast<unsigned long>(p);
  }
  return {big_f, big_h};
}

bool divides_exactly(const ZPoly& cand, const ZPoly& g, ZPoly& quotient) {
  auto [q, r] = divmod(to_unipoly(g), to_unipoly(cand));
  if (!r.is_zero()) return false;
  for (const auto& c : q.coeffs())
    if (c.get_den() != 1) return false;
  quotient.clear();
  for (const auto& c : q.coeffs()) quotient.push_back(c.get_num());
  return true;
}

ZPoly primitive(ZPoly f) {
  Integer content = 0;
  for (const auto& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (f.back() < 0) content = -content;
  for (auto& c : f) c /= content;
  return f;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> zassenhaus(const ZPoly& g) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n <= 1) return {g};
  const Integer& lc = g.back();

  std::mt19937_64 rng(0x5eed);
  std::vector<modp::Poly> best;
  modp::u64 best_p = 0;
  int good = 0;
  for (modp::u64 p = 3; good < 5 && p < 100000; p += 2) {
    bool prime = true;
    for (modp::u64 d = 3; d * d <= p; d += 2)
      if (p % d == 0) { prime = false; break; }
    if (!prime || mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    const modp::Poly gp = modp::reduce(g, p);
    if (modp::deg(modp::gcd(gp, modp::derivative(gp, p), p)) != 0) continue;
    ++good;
    auto factors = modp::factor_squarefree(gp, p, rng);
    if (best_p == 0 || factors.size() < best.size()) {
      best = std::move(factors);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) fail(ErrorKind::InvalidArgument, "no suitable prime for factorization");
  if (best.size() == 1) return {g};
  const modp::u64 p = best_p;

  // Coefficient bound for lc * (any factor): |lc| * 2^n * ||g||_2.
  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  const Integer bound = 2 * abs(lc) * ipow(Integer(2), static_cast<unsigned long>(n)) * norm;
  unsigned k = 1;
  Integer modulus = static_cast<unsigned long>(p);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(p);
    ++k;
  }

  // Sequential two-factor lifting: target = u_i * (lc * u_{i+1} ... u_r).
  std::vector<ZPoly> lifted;
  ZPoly target = g;
  const modp::u64 lc_p = modp::reduce(ZPoly{lc}, p).front();
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    modp::Poly rest{lc_p};
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = modp::mul(rest, best[j], p);
    auto [f_lift, h_lift] = hensel_two(target, best[i], rest, p, k);
    for (auto& c : f_lift) c = symmetric_mod(c, modulus);
    for (auto& c : h_lift) c = symmetric_mod(c, modulus);
    lifted.push_back(std::move(f_lift));
    target = std::move(h_lift);
  }
  // target = lc * u_r mod p^k; make it monic.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : target) c = symmetric_mod(c * lc_inv, modulus);
  lifted.push_back(std::move(target));

  std::vector<ZPoly> result;
  ZPoly rest = g;
  std::vector<ZPoly> pool = std::move(lifted);
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = zmul_mod(cand, pool[i], modulus);
      cand = primitive(cand);
      ZPoly quotient;
      if (divides_exactly(cand, rest, quotient)) {
        result.push_back(cand);
        rest = std::move(quotient);
        for (std::size_t j = idx.size(); j-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[j]));
        found = true;
        break;
      }
    } while (next_combination(idx, pool.size()));
    if (!found) ++size;
  }
  if (rest.size() > 1) result.push_back(primitive(rest));
  return result;
}

}  // namespace

UniPoly Factorization::expand() const {
  UniPoly out = UniPoly::constant(leading);
  for (const auto& [f, m] : factors) out *= pow(f, m);
  return out;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "squarefree decomposition of zero");
  std::vector<UniPoly> out;
  UniPoly a = f.monic();
  if (a.degree() == 0) return out;
  UniPoly da = a.derivative();
  UniPoly b = poly_gcd(a, da);
  UniPoly c = a / b;
  UniPoly d = (da / b) - c.derivative();
  while (c.degree() > 0) {
    UniPoly g = poly_gcd(c, d);
    out.push_back(g);
    c = c / g;
    d = (d / g) - c.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Factorization factor_rational(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  Factorization out{f.leading(), {}};
  const auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (const auto& z : zassenhaus(primitive_integer(parts[i])))
      out.factors.emplace_back(to_unipoly(z).monic(), static_cast<unsigned>(i + 1));
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    const auto& a = x.first.coeffs();
    const auto& b = y.first.coeffs();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return x.second < y.second;
  });
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) return false;
  const auto fac = factor_rational(f);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

}  // namespace gww
