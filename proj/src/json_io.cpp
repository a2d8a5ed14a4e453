#include "gww/json_io.hpp"

#include "gww/errors.hpp"
#include "gww/parse.hpp"

namespace gww {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const Json& j) {
  if (!j.is_number_unsigned()) fail(ErrorKind::ParseError, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json rational_to_json(const Rational& v) { return to_string(v); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  fail(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, "expected a nonempty list of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(ErrorKind::ParseError, "expected nonempty rows");
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(ErrorKind::ParseError, "ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json gw_to_json(const GWClass& c, const std::optional<std::set<Integer>>& primes) {
  const GWClass n = c.normalized();
  const GWInvariants inv = primes ? gw_invariants(c, *primes) : gw_invariants(c);
  Json diag = Json::array();
  for (const auto& a : n.diag()) diag.push_back(rational_to_json(a));
  Json hasse = Json::object();
  // Without explicit primes only 2 and the places with invariant -1 are listed;
  // every other finite place has invariant 1.
  for (const auto& [p, h] : inv.hasse)
    if (primes || p == 2 || h == -1) hasse[to_string(p)] = h;
  hasse["inf"] = inv.hasse_inf;
  Json out;
  out["class"] = n.to_string();
  out["diag"] = std::move(diag);
  out["rank"] = inv.rank;
  out["signature"] = inv.signature;
  out["disc"] = to_string(inv.disc);
  out["hasse"] = std::move(hasse);
  return out;
}

GWClass gw_from_json(const Json& j) {
  const Json& d = member(j, "diag");
  if (!d.is_array()) fail(ErrorKind::ParseError, "diag must be a list");
  std::vector<Rational> v;
  for (const auto& x : d) v.push_back(rational_from_json(x));
  try {
    return GWClass(std::move(v));
  } catch (const MathError& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

Json curve_to_json(const CurveForms& f) {
  Json forms = Json::array();
  for (const auto& p : f) forms.push_back(p.to_string());
  Json out;
  out["degree"] = f[0].degree;
  out["forms"] = std::move(forms);
  return out;
}

CurveForms curve_forms_from_json(const Json& j) {
  const Json& deg = member(j, "degree");
  if (!deg.is_number_integer() || deg.get<long>() < 1 || deg.get<long>() > 64) {
    fail(ErrorKind::ParseError, "degree must be an integer in [1, 64]");
  }
  const int n = deg.get<int>();
  const Json& forms = member(j, "forms");
  if (!forms.is_array() || forms.size() != 4) fail(ErrorKind::ParseError, "forms must be a list of four strings");
  CurveForms out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!forms[i].is_string()) fail(ErrorKind::ParseError, "forms must be strings");
    out[i] = parse_binary_form(forms[i].get<std::string>(), n);
  }
  return out;
}

Json point_to_json(const Point3& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(rational_to_json(x));
  return out;
}

Point3 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) fail(ErrorKind::ParseError, "a point needs four coordinates");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

Json linform_to_json(const LinFormMatrix& m) {
  Json coeff = Json::array();
  for (const auto& c : m.coeff) coeff.push_back(matrix_to_json(c));
  Json out;
  out["rows"] = m.rows;
  out["cols"] = m.cols;
  out["nvars"] = m.nvars;
  out["coeff"] = std::move(coeff);
  return out;
}

LinFormMatrix linform_from_json(const Json& j) {
  const std::size_t rows = size_from_json(member(j, "rows"));
  const std::size_t cols = size_from_json(member(j, "cols"));
  const std::size_t nvars = size_from_json(member(j, "nvars"));
  const Json& coeff = member(j, "coeff");
  if (!coeff.is_array() || coeff.size() != nvars) fail(ErrorKind::ParseError, "coeff needs one matrix per variable");
  std::vector<Matrix> ms;
  for (const auto& c : coeff) {
    Matrix m = matrix_from_json(c);
    if (m.rows() != rows || m.cols() != cols) fail(ErrorKind::ParseError, "coefficient matrix has the wrong shape");
    ms.push_back(std::move(m));
  }
  return LinFormMatrix(rows, cols, std::move(ms));
}

Json plucker_matrix_to_json(const PlueckerLinearMatrix& m) {
  Json basis = Json::array();
  for (const auto& b : wedge_basis(m.nvars, m.c)) basis.push_back(b);
  Json coeff = Json::array();
  for (const auto& c : m.coeff) coeff.push_back(matrix_to_json(c));
  Json out;
  out["rows"] = m.rows;
  out["cols"] = m.cols;
  out["c"] = m.c;
  out["nvars"] = m.nvars;
  out["basis"] = std::move(basis);
  out["coeff"] = std::move(coeff);
  return out;
}

Json secant_to_json(const SecantDatum& s) {
  Json out;
  out["min_poly"] = s.field.min_poly().to_string("z");
  out["at_infinity"] = s.at_infinity;
  out["e1"] = s.e1.to_string();
  out["e2"] = s.e2.to_string();
  out["description"] = s.to_string();
  return out;
}

Json local_to_json(const LocalContribution& l) {
  Json out;
  out["secant"] = secant_to_json(l.secant);
  out["det"] = l.det.to_string();
  out["class"] = gw_to_json(l.cls);
  return out;
}

Json writhe_result_to_json(const WritheResult& r) {
  Json out = gw_to_json(r.gw);
  if (r.det) out["det"] = rational_to_json(*r.det);
  if (r.lambda) out["lambda"] = matrix_to_json(r.lambda->matrix());
  if (!r.locals.empty()) {
    Json locals = Json::array();
    for (const auto& l : r.locals) locals.push_back(local_to_json(l));
    out["locals"] = std::move(locals);
  }
  return out;
}

Json error_to_json(const MathError& e) {
  Json out;
  out["error"] = std::string(e.name());
  out["message"] = e.what();
  return out;
}

}  // namespace gww
