#include "gww/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "gww/errors.hpp"

namespace gww {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) fail(ErrorKind::InvalidArgument, "negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return Rational(1) / leading() * *this;
}

UniPoly UniPoly::reversed(int formal_degree) const {
  if (degree() > formal_degree) fail(ErrorKind::InvalidArgument, "reversal below the degree");
  std::vector<Rational> v(static_cast<std::size_t>(formal_degree) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(formal_degree - i)] = coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) { return Rational(-1) * a; }

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c *= s;
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lc = Rational(1) / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv_lc;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly out = UniPoly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

ExtGcd poly_ext_gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly r0 = f, r1 = g;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {UniPoly{}, UniPoly{}, UniPoly{}};
  const Rational inv = Rational(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "resultant with zero first argument");
  if (g.is_zero()) return f.degree() == 0 ? Rational(1) : Rational(0);
  // Res(f,g) = (-1)^{mn} Res(g,f) and Res(g,f) = lc(g)^{m - deg r} Res(g,r), r = f mod g.
  Rational acc = 1;
  UniPoly a = f, b = g;
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return acc * pow(b.leading(), m);
    if (m == 0) return acc * pow(a.leading(), n);
    UniPoly r = a % b;
    if (r.is_zero()) return 0;
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc *= pow(b.leading(), m - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Matrix sylvester_matrix(const UniPoly& f, const UniPoly& g, int m, int n) {
  if (f.degree() > m || g.degree() > n)
    fail(ErrorKind::InvalidArgument, "formal degree below actual degree");
  const auto size = static_cast<std::size_t>(m + n);
  Matrix s(size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.coeff(n - j);
  return s;
}

Matrix bezoutian(const UniPoly& f, const UniPoly& g, int size) {
  if (f.degree() > size || g.degree() > size)
    fail(ErrorKind::InvalidArgument, "bezoutian size below polynomial degree");
  Matrix c(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  // x^i y^j - x^j y^i = (x - y) * x^j y^j * sum_{k<i-j} x^k y^{i-j-1-k} for i > j.
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j <= g.degree(); ++j) {
      if (i == j) continue;
      const Rational w = f.coeff(i) * g.coeff(j);
      if (sgn(w) == 0) continue;
      const int hi = std::max(i, j), lo = std::min(i, j);
      const Rational sgn_w = i > j ? w : Rational(-w);
      for (int k = 0; k < hi - lo; ++k)
        c(static_cast<std::size_t>(lo + k), static_cast<std::size_t>(lo + hi - lo - 1 - k)) += sgn_w;
    }
  return c;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) fail(ErrorKind::ShapeMismatch, "interpolation size mismatch");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational den = xs[i] - xs[i - level];
      if (sgn(den) == 0) fail(ErrorKind::InvalidArgument, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  UniPoly out;
  for (std::size_t i = n; i-- > 0;)
    out = out * UniPoly{-xs[i], 1} + UniPoly::constant(dd[i]);
  return out;
}

}  // namespace gww
