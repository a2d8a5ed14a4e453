#include "gww/numfield.hpp"

#include <sstream>

#include "gww/errors.hpp"
#include "gww/factor.hpp"

namespace gww {

NumberField::NumberField(UniPoly min_poly) {
  if (min_poly.degree() < 1) fail(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 1");
  if (min_poly.leading() != 1) fail(ErrorKind::InvalidArgument, "minimal polynomial must be monic");
  if (!is_irreducible(min_poly)) {
    fail(ErrorKind::InvalidArgument, "minimal polynomial " + min_poly.to_string("z") + " is reducible");
  }
  data_ = std::make_shared<const Data>(Data{std::move(min_poly)});
}

NumberField NumberField::rationals() {
  static const NumberField q(UniPoly::x());
  return q;
}

namespace {

std::vector<Rational> padded(const UniPoly& p, int d) {
  std::vector<Rational> out(static_cast<std::size_t>(d));
  for (int i = 0; i <= p.degree() && i < d; ++i) out[static_cast<std::size_t>(i)] = p.coeff(i);
  return out;
}

void same_field(const NumberField& a, const NumberField& b) {
  if (!(a == b)) fail(ErrorKind::MismatchedParents, "elements of different number fields");
}

}  // namespace

NFElem::NFElem(NumberField field, const Rational& value)
    : field_(std::move(field)), coords_(static_cast<std::size_t>(field_.degree())) {
  coords_[0] = value;
}

NFElem::NFElem(NumberField field, std::vector<Rational> coords) : field_(std::move(field)) {
  if (static_cast<int>(coords.size()) > field_.degree()) {
    *this = from_poly(field_, UniPoly(std::move(coords)));
    return;
  }
  coords.resize(static_cast<std::size_t>(field_.degree()));
  coords_ = std::move(coords);
}

NFElem NFElem::from_poly(NumberField field, const UniPoly& p) {
  const UniPoly r = p % field.min_poly();
  const int d = field.degree();
  return NFElem(std::move(field), padded(r, d));
}

NFElem NFElem::generator(NumberField field) { return from_poly(std::move(field), UniPoly::x()); }

bool NFElem::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return false;
  }
  return true;
}

NFElem NFElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in a number field");
  if (is_rational()) return NFElem(field_, Rational(1 / coords_[0]));
  // m is irreducible, so gcd(a, m) = 1 and s*a = 1 mod m.
  const ExtGcd eg = poly_ext_gcd(as_poly(), field_.min_poly());
  return from_poly(field_, eg.s);
}

Matrix NFElem::multiplication_matrix() const {
  const auto d = static_cast<std::size_t>(field_.degree());
  Matrix m(d, d);
  NFElem col = *this;
  const NFElem z = generator(field_);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coords_[i];
    if (j + 1 < d) col = col * z;
  }
  return m;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  same_field(a.field_, b.field_);
  NFElem out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] += b.coords_[i];
  return out;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  same_field(a.field_, b.field_);
  NFElem out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] -= b.coords_[i];
  return out;
}

NFElem operator-(const NFElem& a) {
  NFElem out = a;
  for (auto& c : out.coords_) c = -c;
  return out;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  same_field(a.field_, b.field_);
  if (a.field_.degree() == 1) return NFElem(a.field_, Rational(a.coords_[0] * b.coords_[0]));
  return NFElem::from_poly(a.field_, a.as_poly() * b.as_poly());
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NFElem operator*(const Rational& s, const NFElem& a) {
  NFElem out = a;
  for (auto& c : out.coords_) c *= s;
  return out;
}

bool operator==(const NFElem& a, const NFElem& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

std::string NFElem::to_string(const std::string& var) const { return as_poly().to_string(var); }

Rational nf_trace(const NFElem& x) {
  if (x.is_rational()) return Rational(x.field().degree()) * x.rational_part();
  const Matrix m = x.multiplication_matrix();
  Rational tr = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  return tr;
}

QuadExtElem::QuadExtElem(std::shared_ptr<const QuadExt> ring, NFElem c0, NFElem c1)
    : ring_(std::move(ring)), c0_(std::move(c0)), c1_(std::move(c1)) {
  same_field(ring_->base, c0_.field());
  same_field(ring_->base, c1_.field());
}

QuadExtElem::QuadExtElem(std::shared_ptr<const QuadExt> ring, const NFElem& c0)
    : QuadExtElem(ring, c0, NFElem(ring->base, Rational(0))) {}

QuadExtElem::QuadExtElem(std::shared_ptr<const QuadExt> ring, const Rational& c0)
    : QuadExtElem(ring, NFElem(ring->base, c0)) {}

QuadExtElem QuadExtElem::root(std::shared_ptr<const QuadExt> ring) {
  const NumberField& f = ring->base;
  return QuadExtElem(ring, NFElem(f, Rational(0)), NFElem(f, Rational(1)));
}

void QuadExtElem::check_ring(const QuadExtElem& other) const {
  if (ring_ != other.ring_ &&
      !(ring_->base == other.ring_->base && ring_->e1 == other.ring_->e1 && ring_->e2 == other.ring_->e2)) {
    fail(ErrorKind::MismatchedParents, "elements of different quadratic extensions");
  }
}

QuadExtElem QuadExtElem::conj() const {
  // c0 + c1 (e1 - T)
  return QuadExtElem(ring_, c0_ + c1_ * ring_->e1, -c1_);
}

NFElem QuadExtElem::norm() const {
  return c0_ * c0_ + c0_ * c1_ * ring_->e1 + c1_ * c1_ * ring_->e2;
}

QuadExtElem QuadExtElem::inverse() const {
  const NFElem n = norm();
  if (n.is_zero()) fail(ErrorKind::DivisionByZero, "element of the quadratic extension is not invertible");
  const NFElem ninv = n.inverse();
  const QuadExtElem c = conj();
  return QuadExtElem(ring_, c.c0_ * ninv, c.c1_ * ninv);
}

QuadExtElem operator+(const QuadExtElem& a, const QuadExtElem& b) {
  a.check_ring(b);
  return QuadExtElem(a.ring_, a.c0_ + b.c0_, a.c1_ + b.c1_);
}

QuadExtElem operator-(const QuadExtElem& a, const QuadExtElem& b) {
  a.check_ring(b);
  return QuadExtElem(a.ring_, a.c0_ - b.c0_, a.c1_ - b.c1_);
}

QuadExtElem operator-(const QuadExtElem& a) { return QuadExtElem(a.ring_, -a.c0_, -a.c1_); }

QuadExtElem operator*(const QuadExtElem& a, const QuadExtElem& b) {
  a.check_ring(b);
  // T^2 = e1 T - e2
  const NFElem hh = a.c1_ * b.c1_;
  return QuadExtElem(a.ring_, a.c0_ * b.c0_ - hh * a.ring_->e2,
                     a.c0_ * b.c1_ + a.c1_ * b.c0_ + hh * a.ring_->e1);
}

QuadExtElem operator/(const QuadExtElem& a, const QuadExtElem& b) { return a * b.inverse(); }

QuadExtElem operator*(const Rational& s, const QuadExtElem& a) {
  return QuadExtElem(a.ring_, s * a.c0_, s * a.c1_);
}

bool operator==(const QuadExtElem& a, const QuadExtElem& b) {
  a.check_ring(b);
  return a.c0_ == b.c0_ && a.c1_ == b.c1_;
}

NFElem quad_reduce(const QuadExtElem& x) {
  if (!x.c1().is_zero()) {
    fail(ErrorKind::NotGaloisSymmetric, "element is not fixed by T -> e1 - T (c1 = " + x.c1().to_string() + ")");
  }
  return x.c0();
}

NFPoly::NFPoly(NumberField field, std::vector<NFElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) same_field(field_, c.field());
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NFPoly::NFPoly(NumberField field, const UniPoly& p) : field_(std::move(field)) {
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(field_, c);
}

NFElem NFPoly::operator()(const NFElem& x) const {
  NFElem acc(field_, Rational(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

NFPoly nf_poly_rem(const NFPoly& a, const NFPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial remainder by zero");
  same_field(a.field(), b.field());
  std::vector<NFElem> r = a.coeffs();
  const int db = b.degree();
  const NFElem inv_lead = b.coeffs().back().inverse();
  while (static_cast<int>(r.size()) - 1 >= db) {
    const NFElem q = r.back() * inv_lead;
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
    if (!q.is_zero()) {
      for (int i = 0; i <= db; ++i) r[shift + static_cast<std::size_t>(i)] -= q * b.coeffs()[static_cast<std::size_t>(i)];
    }
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return NFPoly(a.field(), std::move(r));
}

NFPoly nf_poly_gcd(const NFPoly& a, const NFPoly& b) {
  NFPoly x = a;
  NFPoly y = b;
  while (!y.is_zero()) {
    NFPoly r = nf_poly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  const NFElem inv = x.coeffs().back().inverse();
  std::vector<NFElem> c;
  for (const auto& e : x.coeffs()) c.push_back(e * inv);
  return NFPoly(x.field(), std::move(c));
}

}  // namespace gww
