#include "gww/gw.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gww/errors.hpp"

namespace gww {

SymBilForm::SymBilForm(Matrix entries) : m_(std::move(entries)) {
  if (!m_.is_square()) fail(ErrorKind::ShapeMismatch, "bilinear form matrix must be square");
  if (!m_.is_symmetric()) fail(ErrorKind::InvalidArgument, "bilinear form matrix must be symmetric");
}

GWClass::GWClass(std::vector<Rational> diag) : diag_(std::move(diag)) {
  for (const auto& a : diag_) {
    if (sgn(a) == 0) fail(ErrorKind::InvalidArgument, "GW generators must be nonzero");
  }
}

GWClass GWClass::normalized() const {
  std::vector<Rational> out;
  out.reserve(diag_.size());
  for (const auto& a : diag_) out.emplace_back(squarefree_part(a));
  std::sort(out.begin(), out.end());
  return GWClass(std::move(out));
}

std::string GWClass::to_string() const {
  if (diag_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (i) os << " + ";
    os << '<' << gww::to_string(diag_[i]) << '>';
  }
  return os.str();
}

GWClass operator+(const GWClass& a, const GWClass& b) {
  std::vector<Rational> d = a.diag_;
  d.insert(d.end(), b.diag_.begin(), b.diag_.end());
  return GWClass(std::move(d));
}

GWClass operator*(const Rational& s, const GWClass& c) {
  std::vector<Rational> d;
  for (const auto& a : c.diag_) d.emplace_back(s * a);
  return GWClass(std::move(d));
}

GWClass operator*(unsigned n, const GWClass& c) {
  GWClass out;
  for (unsigned i = 0; i < n; ++i) out += c;
  return out;
}

namespace {

void swap_index(Matrix& a, Matrix& p, std::size_t i, std::size_t k) {
  if (i == k) return;
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
  for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, k));
  for (std::size_t j = 0; j < n; ++j) std::swap(p(j, i), p(j, k));
}

}  // namespace

Diagonalization diagonalize(const SymBilForm& form) {
  Matrix a = form.matrix();
  const std::size_t n = a.rows();
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i) {
      if (sgn(a(i, i)) != 0) piv = i;
    }
    if (piv == n) {
      // No nonzero diagonal entry: basis change e_i += e_j makes a(i,i) = 2a(i,j).
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(a(i, j)) != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
      for (std::size_t r = 0; r < n; ++r) p(r, bi) += p(r, bj);
      piv = bi;
    }
    swap_index(a, p, piv, k);
    const Rational pivot = a(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (sgn(a(k, j)) == 0) continue;
      const Rational c = a(k, j) / pivot;
      for (std::size_t r = 0; r < n; ++r) a(j, r) -= c * a(k, r);
      for (std::size_t r = 0; r < n; ++r) a(r, j) -= c * a(r, k);
      for (std::size_t r = 0; r < n; ++r) p(r, j) -= c * p(r, k);
    }
  }
  Diagonalization out;
  out.diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.diag.push_back(a(i, i));
  out.transform = std::move(p);
  return out;
}

GWClass gw_from_matrix(const SymBilForm& m) {
  Diagonalization d = diagonalize(m);
  for (const auto& a : d.diag) {
    if (sgn(a) == 0) fail(ErrorKind::SingularForm, "form is degenerate (det = 0)");
  }
  return GWClass(std::move(d.diag));
}

namespace {

/// a = p^v * u with p not dividing u, for a nonzero integer.
std::pair<unsigned long, Integer> split_valuation(const Integer& a, const Integer& p) {
  Integer u = a;
  unsigned long v = 0;
  while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return {v, u};
}

int mod8(const Integer& u) { return static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(), 8)); }

/// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd u.
int eps2(const Integer& u) { return mod8(u) % 4 == 3 ? 1 : 0; }
int omega2(const Integer& u) {
  const int r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

Integer as_integer_class(const Rational& a) { return a.get_num() * a.get_den(); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
  if (place.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Integer& p = place.prime;
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    fail(ErrorKind::InvalidArgument, "Hilbert symbol at non-prime " + to_string(p));
  }
  const auto [alpha, u] = split_valuation(as_integer_class(a), p);
  const auto [beta, v] = split_valuation(as_integer_class(b), p);
  if (p == 2) {
    const int e = (eps2(u) * eps2(v) + static_cast<int>(alpha % 2) * omega2(v) + static_cast<int>(beta % 2) * omega2(u)) % 2;
    return e ? -1 : 1;
  }
  int s = 1;
  // (-1)^{alpha beta (p-1)/2}
  if ((alpha % 2) && (beta % 2) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) s = -s;
  if (beta % 2) s *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2) s *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
  return s;
}

int hasse_invariant(const GWClass& c, const Place& p) {
  int h = 1;
  const auto& d = c.diag();
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) h *= hilbert_symbol(d[i], d[j], p);
  }
  return h;
}

std::set<Integer> relevant_primes(const GWClass& c) {
  std::set<Integer> primes{2};
  for (const auto& a : c.diag()) {
    for (const auto& [p, e] : factor_integer(squarefree_part(a))) primes.insert(p);
  }
  return primes;
}

GWInvariants gw_invariants(const GWClass& c, const std::set<Integer>& primes) {
  GWInvariants inv;
  inv.rank = static_cast<int>(c.rank());
  Rational det = 1;
  for (const auto& a : c.diag()) {
    inv.signature += sgn(a) > 0 ? 1 : -1;
    det *= a;
  }
  inv.disc = squarefree_part(det);
  for (const auto& p : primes) inv.hasse[p] = hasse_invariant(c, Place::at(p));
  inv.hasse_inf = hasse_invariant(c, Place::inf());
  return inv;
}

GWInvariants gw_invariants(const GWClass& c) { return gw_invariants(c, relevant_primes(c)); }

bool gw_equal(const GWClass& a, const GWClass& b) {
  if (a.rank() != b.rank()) return false;
  const GWClass na = a.normalized();
  const GWClass nb = b.normalized();
  std::set<Integer> primes = relevant_primes(na);
  primes.merge(relevant_primes(nb));
  const GWInvariants ia = gw_invariants(na, primes);
  const GWInvariants ib = gw_invariants(nb, primes);
  return ia.signature == ib.signature && ia.disc == ib.disc && ia.hasse == ib.hasse;
}

Matrix trace_matrix(const NFElem& a) {
  const NumberField& f = a.field();
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<Rational> traces;
  const NFElem z = NFElem::generator(f);
  NFElem acc = a;
  for (std::size_t m = 0; m + 1 < 2 * d; ++m) {
    traces.push_back(nf_trace(acc));
    acc = acc * z;
  }
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) g(i, j) = traces[i + j];
  }
  return g;
}

GWClass trace_form(const NFElem& a) {
  if (a.is_zero()) fail(ErrorKind::InvalidArgument, "trace form scaled by zero");
  return gw_from_matrix(SymBilForm(trace_matrix(a)));
}

namespace {

void check_pair(const UniPoly& f, const UniPoly& g, int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "matrix size must be positive");
  if (f.degree() != n || f.leading() != 1) fail(ErrorKind::InvalidArgument, "f must be monic of degree n");
  if (g.degree() >= n) fail(ErrorKind::InvalidArgument, "deg g must be less than n");
}

}  // namespace

SymBilForm bezout_matrix(const UniPoly& f, const UniPoly& g, int n) {
  check_pair(f, g, n);
  return SymBilForm(bezoutian(f, g, n));
}

std::vector<Rational> laurent_coefficients(const UniPoly& f, const UniPoly& g, int count) {
  const int n = f.degree();
  if (n < 1 || g.degree() >= n) fail(ErrorKind::InvalidArgument, "need deg g < deg f");
  // With u = 1/t: g/f = u * grev(u)/frev(u), frev(0) = lc(f).
  const UniPoly frev = f.reversed(n);
  const UniPoly grev = g.reversed(n - 1);
  std::vector<Rational> h(static_cast<std::size_t>(count));
  const Rational lead = frev.coeff(0);
  for (int k = 0; k < count; ++k) {
    Rational acc = grev.coeff(k);
    for (int j = 1; j <= k && j <= n; ++j) acc -= frev.coeff(j) * h[static_cast<std::size_t>(k - j)];
    h[static_cast<std::size_t>(k)] = acc / lead;
  }
  return h;
}

SymBilForm hankel_matrix(const UniPoly& f, const UniPoly& g, int n) {
  check_pair(f, g, n);
  const auto h = laurent_coefficients(f, g, 2 * n - 1);
  const auto un = static_cast<std::size_t>(n);
  Matrix m(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) m(i, j) = h[i + j];
  }
  return SymBilForm(std::move(m));
}

}  // namespace gww
