#include "gww/writhe.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <utility>

#include "gww/errors.hpp"
#include "gww/factor.hpp"

namespace gww {

BinaryForm::BinaryForm(int d, std::vector<Rational> c) : degree(d), coeffs(std::move(c)) {
  if (degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1) {
    fail(ErrorKind::InvalidArgument, "binary form of degree n needs n+1 coefficients");
  }
}

Rational BinaryForm::operator()(const Rational& r, const Rational& s) const {
  Rational acc = 0;
  for (int k = 0; k <= degree; ++k) acc += coeffs[static_cast<std::size_t>(k)] * pow(r, degree - k) * pow(s, k);
  return acc;
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree; ++k) {
    const Rational& c = coeffs[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    std::vector<std::string> parts;
    if (a != 1) parts.push_back(gww::to_string(a));
    const int pr = degree - k;
    if (pr > 0) parts.push_back(pr == 1 ? "r" : "r^" + std::to_string(pr));
    if (k > 0) parts.push_back(k == 1 ? "s" : "s^" + std::to_string(k));
    if (parts.empty()) parts.push_back(gww::to_string(a));
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return first ? "0" : os.str();
}

RationalCurve::RationalCurve(CurveForms forms) : forms_(std::move(forms)) {
  const int n = forms_[0].degree;
  for (const auto& f : forms_) {
    if (f.degree != n) fail(ErrorKind::InvalidArgument, "curve forms must share one degree");
  }
  Matrix m(4, static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) m(i, k) = forms_[i].coeffs[k];
  }
  if (rank(m) < 4) fail(ErrorKind::NotEmbedding, "curve forms are linearly dependent");
  UniPoly g;
  bool zero_at_infinity = true;
  for (const auto& f : forms_) {
    g = poly_gcd(g, f.dehomogenized());
    if (sgn(f.coeffs.back()) != 0) zero_at_infinity = false;
  }
  if (g.degree() >= 1 || zero_at_infinity) fail(ErrorKind::NotEmbedding, "curve forms have a common zero");
}

std::array<Rational, 4> RationalCurve::operator()(const Rational& r, const Rational& s) const {
  return {forms_[0](r, s), forms_[1](r, s), forms_[2](r, s), forms_[3](r, s)};
}

RationalCurve RationalCurve::transformed(const Matrix& a) const {
  if (a.rows() != 4 || a.cols() != 4) fail(ErrorKind::ShapeMismatch, "transformation must be 4x4");
  const int n = degree();
  CurveForms out;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += a(i, j) * forms_[j].coeffs[k];
    }
    out[i] = BinaryForm(n, std::move(c));
  }
  return RationalCurve(std::move(out));
}

std::array<Rational, 5> wedge_coords(const CurveForms& forms) {
  for (const auto& f : forms) {
    if (f.degree != 4) fail(ErrorKind::InvalidArgument, "wedge coordinates need binary quartics");
  }
  std::array<Rational, 5> x;
  for (std::size_t i = 0; i < 5; ++i) {
    Matrix m(5, 5);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t k = 0; k < 5; ++k) m(r, k) = forms[r].coeffs[k];
    }
    m(4, i) = 1;
    x[i] = determinant(m);
  }
  return x;
}

SymBilForm hankel_lambda(const CurveForms& forms) {
  const auto x = wedge_coords(forms);
  Matrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = x[i + j];
  }
  return SymBilForm(std::move(m));
}

RationalCurve curve_with_wedge_coords(const std::array<Rational, 5>& x) {
  std::size_t k = 5;
  for (std::size_t i = 0; i < 5 && k == 5; ++i) {
    if (sgn(x[i]) != 0) k = i;
  }
  if (k == 5) fail(ErrorKind::InvalidArgument, "wedge coordinates must not all vanish");
  // The span of the forms is the kernel of y -> sum x_i y_i.
  CurveForms forms;
  std::size_t r = 0;
  for (std::size_t j = 0; j < 5; ++j) {
    if (j == k) continue;
    std::vector<Rational> c(5);
    c[j] = 1;
    c[k] = -x[j] / x[k];
    forms[r++] = BinaryForm(4, std::move(c));
  }
  const auto got = wedge_coords(forms);
  const Rational lambda = got[k] / x[k];
  for (auto& c : forms[0].coeffs) c /= lambda;
  if (wedge_coords(forms) != x) fail(ErrorKind::InvalidArgument, "wedge coordinates not realized");
  return RationalCurve(std::move(forms));
}

Chart::Chart(Matrix m) : matrix(std::move(m)) {
  if (matrix.rows() != 4 || matrix.cols() != 4) fail(ErrorKind::ShapeMismatch, "chart matrix must be 4x4");
  const Rational d = determinant(matrix);
  if (sgn(d) == 0 || !is_kth_power_class(d, 1, 2)) {
    fail(ErrorKind::ChartFailure, "chart determinant must be a nonzero square");
  }
}

Chart Chart::from_linear_form(const std::array<Rational, 4>& l) {
  std::size_t j = 4;
  for (std::size_t i = 0; i < 4 && j == 4; ++i) {
    if (sgn(l[i]) != 0) j = i;
  }
  if (j == 4) fail(ErrorKind::ChartFailure, "zero linear form");
  Matrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) m(0, i) = l[i];
  std::size_t row = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != j) m(row++, i) = 1;
  }
  const Rational d = determinant(m);
  for (std::size_t i = 0; i < 4; ++i) m(1, i) /= d;
  return Chart(std::move(m));
}

std::string SecantDatum::key() const {
  return field.min_poly().to_string("z") + "|" + (at_infinity ? "1" : "0") + "|" + e1.to_string() + "|" +
         e2.to_string();
}

std::string SecantDatum::to_string() const {
  std::string f = "Q[z]/(" + field.min_poly().to_string("z") + ")";
  if (at_infinity) return "{t, oo} with t = " + e2.to_string() + " over " + f;
  return "t^2 - (" + e1.to_string() + ")t + (" + e2.to_string() + ") over " + f;
}

namespace {

/// g[i][j]: coefficient of e0^{k-i-j} e1^i e2^j.
using SymForm = std::vector<std::vector<Rational>>;

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Rewrites a symmetric c(i,j) t1^i t2^j (i, j <= k) in e1 = t1 + t2, e2 = t1 t2.
SymForm to_elementary(Matrix c, int k) {
  SymForm g(static_cast<std::size_t>(k) + 1, std::vector<Rational>(static_cast<std::size_t>(k) + 1));
  for (int total = 2 * k; total >= 0; --total) {
    for (int a = std::min(k, total); 2 * a >= total; --a) {
      const int b = total - a;
      const Rational s = c(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (sgn(s) == 0) continue;
      g[static_cast<std::size_t>(a - b)][static_cast<std::size_t>(b)] += s;
      // e1^{a-b} e2^b = sum_m C(a-b, m) t1^{b+m} t2^{a-m}
      for (int m = 0; m <= a - b; ++m) {
        c(static_cast<std::size_t>(b + m), static_cast<std::size_t>(a - m)) -=
            s * Rational(binomial(static_cast<unsigned long>(a - b), static_cast<unsigned long>(m)));
      }
    }
  }
  if (!c.is_zero()) fail(ErrorKind::InvalidArgument, "secant minor is not symmetric");
  return g;
}

/// The four maximal minors of [q; phi(1,t1); phi(1,t2)] divided by t1 - t2.
std::vector<SymForm> secant_equations(const RationalCurve& c, const Point3& q) {
  const int n = c.degree();
  const int k = n - 1;
  std::vector<UniPoly> p;
  for (const auto& f : c.forms()) p.push_back(f.dehomogenized());
  std::vector<SymForm> out;
  for (std::size_t omit = 0; omit < 4; ++omit) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != omit) cols.push_back(i);
    }
    const auto a = cols[0], b = cols[1], d = cols[2];
    const Matrix m = q[a] * bezoutian(p[b], p[d], n) - q[b] * bezoutian(p[a], p[d], n) + q[d] * bezoutian(p[a], p[b], n);
    out.push_back(to_elementary(m, k));
  }
  return out;
}

/// Bivariate polynomial as coefficients of powers of e2, each a polynomial in u.
using BiPoly = std::vector<UniPoly>;

/// H(u, e2) = G(1, u - c e2, e2).
BiPoly shear(const SymForm& g, int k, const Rational& c) {
  BiPoly h(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      const Rational& gij = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (sgn(gij) == 0) continue;
      for (int m = 0; m <= i; ++m) {
        const Rational coef = gij * Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(m))) * pow(Rational(-c), m);
        h[static_cast<std::size_t>(m + j)] += UniPoly::monomial(coef, i - m);
      }
    }
  }
  return h;
}

UniPoly at_u(const BiPoly& h, const Rational& u) {
  std::vector<Rational> c;
  for (const auto& p : h) c.push_back(p(u));
  return UniPoly(std::move(c));
}

/// Res_{e2}(h1, h2) with formal degree k in e2, as a polynomial in u.
UniPoly eliminate(const BiPoly& h1, const BiPoly& h2, int k) {
  const int points = k * k + 1;
  std::vector<Rational> xs, ys;
  for (int i = 0; i < points; ++i) {
    const Rational u = (i % 2 == 0) ? Rational(i / 2) : Rational(-(i + 1) / 2);
    xs.push_back(u);
    ys.push_back(determinant(sylvester_matrix(at_u(h1, u), at_u(h2, u), k, k)));
  }
  return interpolate(xs, ys);
}

NFElem horner(const UniPoly& p, const NFElem& x) {
  NFElem acc(x.field(), Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + NFElem(x.field(), p.coeff(i));
  return acc;
}

/// G or one of its partial derivatives (var 0, 1, 2 for e0, e1, e2; -1 for
/// the value) at a point over F.
NFElem eval_sym(const SymForm& g, int k, int var, const NFElem& e0, const NFElem& e1, const NFElem& e2) {
  const NumberField& f = e0.field();
  auto powers = [&](const NFElem& x) {
    std::vector<NFElem> pw{NFElem(f, Rational(1))};
    for (int i = 0; i < k; ++i) pw.push_back(pw.back() * x);
    return pw;
  };
  const auto p0 = powers(e0), p1 = powers(e1), p2 = powers(e2);
  NFElem acc(f, Rational(0));
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      const Rational& gij = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (sgn(gij) == 0) continue;
      int ex[3] = {k - i - j, i, j};
      Rational factor = gij;
      if (var >= 0) {
        if (ex[var] == 0) continue;
        factor *= ex[var];
        --ex[var];
      }
      acc += factor * (p0[static_cast<std::size_t>(ex[0])] * p1[static_cast<std::size_t>(ex[1])] *
                       p2[static_cast<std::size_t>(ex[2])]);
    }
  }
  return acc;
}

struct FieldPoint {
  NumberField field;
  NFElem value;
};

/// Field generated by a root of the irreducible monic m, with that root.
FieldPoint root_of(const UniPoly& m) {
  if (m.degree() == 1) {
    const NumberField q = NumberField::rationals();
    return {q, NFElem(q, Rational(-m.coeff(0)))};
  }
  NumberField f(m);
  return {f, NFElem::generator(f)};
}

std::vector<SecantDatum> finite_secants(const std::vector<SymForm>& gs, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-5, 5);
  auto combo = [&] {
    SymForm h(static_cast<std::size_t>(k) + 1, std::vector<Rational>(static_cast<std::size_t>(k) + 1));
    for (const auto& g : gs) {
      const Rational w = small(rng);
      for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < h.size(); ++j) h[i][j] += w * g[i][j];
      }
    }
    return h;
  };
  constexpr int kShears = 12;
  for (int attempt = 0; attempt < kShears; ++attempt) {
    const Rational c = (attempt % 2 == 0) ? Rational(attempt / 2) : Rational(-(attempt + 1) / 2);
    UniPoly d;
    int resultants = 0;
    for (int trial = 0; trial < 8 && resultants < 3; ++trial) {
      const UniPoly r = eliminate(shear(combo(), k, c), shear(combo(), k, c), k);
      if (r.is_zero()) continue;
      d = poly_gcd(d, r);
      ++resultants;
    }
    if (resultants == 0) continue;
    if (d.degree() <= 0) return {};
    std::vector<SecantDatum> out;
    bool separated = true;
    for (const auto& [m, mult] : factor_rational(d).factors) {
      const FieldPoint u = root_of(m);
      NFPoly common(u.field, std::vector<NFElem>{});
      for (const auto& g : gs) {
        const BiPoly h = shear(g, k, c);
        std::vector<NFElem> co;
        for (const auto& hb : h) co.push_back(horner(hb, u.value));
        common = nf_poly_gcd(common, NFPoly(u.field, std::move(co)));
      }
      if (common.is_zero()) fail(ErrorKind::DegenerateConfiguration, "secant locus through the point is positive-dimensional");
      if (common.degree() == 0) continue;
      if (common.degree() >= 2) {
        separated = false;
        break;
      }
      const NFElem e2 = -common.coeffs()[0];
      const NFElem e1 = u.value - c * e2;
      out.push_back(SecantDatum{u.field, e1, e2, false});
    }
    if (separated) return out;
  }
  fail(ErrorKind::DegenerateConfiguration, "secant lines could not be separated by a projection");
}

std::vector<SecantDatum> infinite_secants(const std::vector<SymForm>& gs, int k) {
  const auto uk = static_cast<std::size_t>(k);
  bool both_infinite = true;
  UniPoly g;
  for (const auto& s : gs) {
    if (sgn(s[0][uk]) != 0) both_infinite = false;
    std::vector<Rational> c(uk + 1);
    for (std::size_t j = 0; j <= uk; ++j) c[j] = s[uk - j][j];
    g = poly_gcd(g, UniPoly(std::move(c)));
  }
  if (both_infinite) fail(ErrorKind::DegenerateConfiguration, "the tangent line at the point at infinity passes through q");
  if (g.is_zero()) fail(ErrorKind::DegenerateConfiguration, "secant locus through the point is positive-dimensional");
  std::vector<SecantDatum> out;
  if (g.degree() <= 0) return out;
  for (const auto& [m, mult] : factor_rational(g).factors) {
    const FieldPoint t = root_of(m);
    out.push_back(SecantDatum{t.field, NFElem(t.field, Rational(1)), t.value, true});
  }
  return out;
}

void check_solution(const std::vector<SymForm>& gs, int k, const SecantDatum& s) {
  const NumberField& f = s.field;
  const NFElem one(f, Rational(1)), zero(f, Rational(0));
  const NFElem e0 = s.at_infinity ? zero : one;
  for (const auto& g : gs) {
    if (!eval_sym(g, k, -1, e0, s.e1, s.e2).is_zero()) {
      fail(ErrorKind::DegenerateConfiguration, "candidate secant does not solve the secant equations");
    }
  }
  if (!s.at_infinity && (s.e1 * s.e1 - Rational(4) * s.e2).is_zero()) {
    fail(ErrorKind::DegenerateConfiguration, "a tangent line of the curve passes through the point");
  }
  // Simple solution: the Jacobian in the two affine chart variables has rank 2.
  const int va = s.at_infinity ? 0 : 1;
  std::vector<std::array<NFElem, 2>> jac;
  for (const auto& g : gs) jac.push_back({eval_sym(g, k, va, e0, s.e1, s.e2), eval_sym(g, k, 2, e0, s.e1, s.e2)});
  for (std::size_t i = 0; i < jac.size(); ++i) {
    for (std::size_t j = i + 1; j < jac.size(); ++j) {
      if (!(jac[i][0] * jac[j][1] - jac[i][1] * jac[j][0]).is_zero()) return;
    }
  }
  fail(ErrorKind::DegenerateConfiguration, "secant through the point has multiplicity >= 2");
}

void check_off_curve(const RationalCurve& c, const Point3& q) {
  if (std::all_of(q.begin(), q.end(), [](const Rational& x) { return sgn(x) == 0; })) {
    fail(ErrorKind::InvalidArgument, "the zero vector is not a point");
  }
  UniPoly g;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      g = poly_gcd(g, q[i] * c.form(j).dehomogenized() - q[j] * c.form(i).dehomogenized());
    }
  }
  if (g.degree() >= 1) fail(ErrorKind::PointOnCurve, "query point lies on the curve");
  const Point3 inf = c(0, 1);
  bool prop = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (q[i] * inf[j] != q[j] * inf[i]) prop = false;
    }
  }
  if (prop) fail(ErrorKind::PointOnCurve, "query point lies on the curve");
}

}  // namespace

std::vector<SecantDatum> secants_through_point(const RationalCurve& c, const Point3& q, const WritheOptions& opts) {
  check_off_curve(c, q);
  const int k = c.degree() - 1;
  if (k < 1) fail(ErrorKind::InvalidArgument, "curve degree must be at least 2");
  const auto gs = secant_equations(c, q);
  std::mt19937_64 rng(opts.seed);
  std::vector<SecantDatum> out = finite_secants(gs, k, rng);
  for (auto& s : infinite_secants(gs, k)) out.push_back(std::move(s));
  for (const auto& s : out) check_solution(gs, k, s);
  std::sort(out.begin(), out.end(), [](const SecantDatum& a, const SecantDatum& b) { return a.key() < b.key(); });
  return out;
}

namespace {

Chart search_chart(const std::function<bool(const std::array<Rational, 4>&)>& ok, const WritheOptions& opts) {
  const std::array<Rational, 4> x0{1, 0, 0, 0};
  if (ok(x0)) return Chart::identity();
  const std::array<Rational, 4> x03{1, 0, 0, 1};
  if (ok(x03)) return Chart::from_linear_form(x03);
  std::mt19937_64 rng(opts.seed ^ 0xc4a27ULL);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::array<Rational, 4> l{small(rng), small(rng), small(rng), small(rng)};
    if (std::all_of(l.begin(), l.end(), [](const Rational& v) { return sgn(v) == 0; })) continue;
    if (ok(l)) return Chart::from_linear_form(l);
  }
  fail(ErrorKind::ChartFailure, "no affine chart contains all points");
}

QuadExtElem apply_row(const Matrix& m, std::size_t row, const QuadPoint& p) {
  QuadExtElem acc(p[0].ring(), Rational(0));
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(m(row, i)) != 0) acc = acc + m(row, i) * p[i];
  }
  return acc;
}

QuadExtElem apply_form(const std::array<Rational, 4>& l, const QuadPoint& p) {
  QuadExtElem acc(p[0].ring(), Rational(0));
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(l[i]) != 0) acc = acc + l[i] * p[i];
  }
  return acc;
}

}  // namespace

Chart select_chart(const std::vector<QuadPoint>& points, const WritheOptions& opts) {
  if (points.empty()) fail(ErrorKind::InvalidArgument, "no points given");
  return search_chart(
      [&](const std::array<Rational, 4>& l) {
        return std::all_of(points.begin(), points.end(), [&](const QuadPoint& p) { return apply_form(l, p).is_unit(); });
      },
      opts);
}

Chart select_chart(const std::vector<Point3>& points, const WritheOptions& opts) {
  if (points.empty()) fail(ErrorKind::InvalidArgument, "no points given");
  return search_chart(
      [&](const std::array<Rational, 4>& l) {
        return std::all_of(points.begin(), points.end(), [&](const Point3& p) {
          Rational v = 0;
          for (std::size_t i = 0; i < 4; ++i) v += l[i] * p[i];
          return sgn(v) != 0;
        });
      },
      opts);
}

namespace {

using Ring = std::shared_ptr<const QuadExt>;

struct Endpoint {
  QuadPoint point;
  QuadPoint tangent;
};

QuadExtElem horner(const UniPoly& p, const QuadExtElem& x) {
  QuadExtElem acc(x.ring(), Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + QuadExtElem(x.ring(), p.coeff(i));
  return acc;
}

QuadPoint constant_point(const Ring& ring, const std::array<NFElem, 4>& v) {
  return {QuadExtElem(ring, v[0]), QuadExtElem(ring, v[1]), QuadExtElem(ring, v[2]), QuadExtElem(ring, v[3])};
}

/// phi(1, t) and d/dt phi(1, t).
Endpoint finite_endpoint(const RationalCurve& c, const QuadExtElem& t) {
  Endpoint e{{t, t, t, t}, {t, t, t, t}};
  for (std::size_t i = 0; i < 4; ++i) {
    const UniPoly p = c.form(i).dehomogenized();
    e.point[i] = horner(p, t);
    e.tangent[i] = horner(p.derivative(), t);
  }
  return e;
}

/// phi(-tbar, 1) and its tbar-derivative at tbar = 0.
Endpoint infinite_endpoint(const RationalCurve& c, const Ring& ring) {
  const auto n = static_cast<std::size_t>(c.degree());
  const NumberField& f = ring->base;
  std::array<NFElem, 4> p{NFElem(f, Rational(0)), NFElem(f, Rational(0)), NFElem(f, Rational(0)), NFElem(f, Rational(0))};
  std::array<NFElem, 4> d = p;
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = NFElem(f, c.form(i).coeffs[n]);
    d[i] = NFElem(f, Rational(-c.form(i).coeffs[n - 1]));
  }
  return {constant_point(ring, p), constant_point(ring, d)};
}

/// Chart coordinates' derivative of the curve through P with velocity V.
std::array<QuadExtElem, 3> chart_velocity(const Matrix& m, const QuadPoint& p, const QuadPoint& v) {
  const QuadExtElem lp = apply_row(m, 0, p);
  const QuadExtElem lv = apply_row(m, 0, v);
  const QuadExtElem inv2 = (lp * lp).inverse();
  std::array<QuadExtElem, 3> out{lp, lp, lp};
  for (std::size_t r = 1; r < 4; ++r) out[r - 1] = (apply_row(m, r, v) * lp - apply_row(m, r, p) * lv) * inv2;
  return out;
}

/// alpha, beta with alpha A + beta B = q.
std::pair<QuadExtElem, QuadExtElem> line_coefficients(const QuadPoint& a, const QuadPoint& b, const QuadPoint& q,
                                                      std::mt19937_64& rng) {
  auto attempt = [&](const std::array<QuadExtElem, 2>& fa, const std::array<QuadExtElem, 2>& fb,
                     const std::array<QuadExtElem, 2>& fq) -> std::optional<std::pair<QuadExtElem, QuadExtElem>> {
    const QuadExtElem det = fa[0] * fb[1] - fa[1] * fb[0];
    if (!det.is_unit()) return std::nullopt;
    const QuadExtElem inv = det.inverse();
    QuadExtElem alpha = (fq[0] * fb[1] - fq[1] * fb[0]) * inv;
    QuadExtElem beta = (fa[0] * fq[1] - fa[1] * fq[0]) * inv;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!(alpha * a[i] + beta * b[i] == q[i])) fail(ErrorKind::DegenerateConfiguration, "query point is not on the secant line");
    }
    return std::make_pair(std::move(alpha), std::move(beta));
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (auto r = attempt({a[i], a[j]}, {b[i], b[j]}, {q[i], q[j]})) return *r;
    }
  }
  std::uniform_int_distribution<int> small(-4, 4);
  for (int tries = 0; tries < 200; ++tries) {
    std::array<Rational, 4> f{small(rng), small(rng), small(rng), small(rng)};
    std::array<Rational, 4> g{small(rng), small(rng), small(rng), small(rng)};
    if (auto r = attempt({apply_form(f, a), apply_form(g, a)}, {apply_form(f, b), apply_form(g, b)},
                         {apply_form(f, q), apply_form(g, q)})) {
      return *r;
    }
  }
  fail(ErrorKind::ChartFailure, "could not express the query point on the secant line");
}

QuadExtElem det3(const std::array<QuadExtElem, 3>& c0, const std::array<QuadExtElem, 3>& c1,
                 const std::array<QuadExtElem, 3>& c2) {
  // Columns c0, c1, c2.
  return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
         c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

}  // namespace

NFElem local_writhe_det(const RationalCurve& c, const Point3& q, const SecantDatum& s, const LocalWritheOptions& opts) {
  const NumberField& f = s.field;
  const NFElem zero(f, Rational(0));
  const Ring ring = s.at_infinity ? std::make_shared<const QuadExt>(QuadExt{f, zero, zero})
                                  : std::make_shared<const QuadExt>(QuadExt{f, s.e1, s.e2});
  const QuadExtElem t = QuadExtElem::root(ring);
  Endpoint ea = s.at_infinity ? finite_endpoint(c, QuadExtElem(ring, s.e2)) : finite_endpoint(c, t);
  Endpoint eb = s.at_infinity ? infinite_endpoint(c, ring) : finite_endpoint(c, t.conj());
  if (opts.swap_endpoints) std::swap(ea, eb);
  const QuadPoint qq = constant_point(ring, {NFElem(f, q[0]), NFElem(f, q[1]), NFElem(f, q[2]), NFElem(f, q[3])});

  std::mt19937_64 rng(opts.base.seed);
  const auto [alpha, beta] = line_coefficients(ea.point, eb.point, qq, rng);

  const Chart chart = opts.chart ? *opts.chart : select_chart({ea.point, eb.point, qq}, opts.base);
  const Matrix& m = chart.matrix;
  for (const QuadPoint* p : {&std::as_const(ea.point), &std::as_const(eb.point), &qq}) {
    if (!apply_row(m, 0, *p).is_unit()) fail(ErrorKind::ChartFailure, "chart does not contain the secant configuration");
  }
  // Every frame vector is a velocity of the point q itself: moving one
  // endpoint along the curve (or q along the line) with the line parameter of
  // q held at 1.
  QuadPoint sum = ea.point, da = ea.tangent, db = eb.tangent, b = eb.point;
  for (std::size_t i = 0; i < 4; ++i) {
    sum[i] = alpha * ea.point[i] + beta * eb.point[i];
    da[i] = alpha * da[i];
    db[i] = beta * db[i];
    b[i] = beta * b[i];
  }
  const auto v = chart_velocity(m, sum, da);
  const auto u = chart_velocity(m, sum, b);
  const auto w = chart_velocity(m, sum, db);

  const QuadExtElem d = det3(v, u, w);
  if (d.is_zero()) fail(ErrorKind::ChartFailure, "degenerate Viro frame (det = 0)");
  return quad_reduce(d);
}

GWClass local_writhe(const RationalCurve& c, const Point3& q, const SecantDatum& s, const LocalWritheOptions& opts) {
  return trace_form(local_writhe_det(c, q, s, opts));
}

WritheResult writhe_deg4(const RationalCurve& c) {
  if (c.degree() != 4) fail(ErrorKind::InvalidArgument, "the Hankel writhe needs a degree-4 curve");
  SymBilForm lambda = hankel_lambda(c);
  const Rational det = determinant(lambda.matrix());
  if (sgn(det) == 0) fail(ErrorKind::NotEmbedding, "Hankel matrix is singular: the linear system is not very ample");
  WritheResult r;
  r.gw = gw_from_matrix(lambda);
  r.det = det;
  r.lambda = std::move(lambda);
  return r;
}

WritheResult writhe_local_sum(const RationalCurve& c, const Point3& q, const WritheOptions& opts) {
  WritheResult r;
  LocalWritheOptions lo;
  lo.base = opts;
  for (auto& s : secants_through_point(c, q, opts)) {
    NFElem d = local_writhe_det(c, q, s, lo);
    GWClass cls = trace_form(d);
    r.gw += cls;
    r.locals.push_back({std::move(s), std::move(d), std::move(cls)});
  }
  return r;
}

}  // namespace gww
