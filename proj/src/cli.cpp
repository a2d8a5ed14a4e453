#include "gww/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "gww/chow.hpp"
#include "gww/errors.hpp"
#include "gww/gw.hpp"
#include "gww/isotopy.hpp"
#include "gww/json_io.hpp"
#include "gww/parse.hpp"
#include "gww/writhe.hpp"

namespace gww {

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
}

Point3 parse_point(const std::string& text) {
  const auto v = parse_rational_list(text);
  if (v.size() != 4) fail(ErrorKind::ParseError, "a point needs four coordinates");
  return {v[0], v[1], v[2], v[3]};
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::NotAlternating:
    case ErrorKind::NonCommuting:
      return kExitParse;
    default:
      return kExitInvalid;
  }
}

/// Deterministic pseudo-random points until the local sum succeeds.
std::pair<Point3, WritheResult> local_sum_at_random_point(const RationalCurve& c, std::mt19937_64& rng,
                                                          const WritheOptions& opts) {
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Point3 q{coord(rng), coord(rng), coord(rng), coord(rng)};
    try {
      return {q, writhe_local_sum(c, q, opts)};
    } catch (const MathError& e) {
      if (e.kind() != ErrorKind::PointOnCurve && e.kind() != ErrorKind::DegenerateConfiguration &&
          e.kind() != ErrorKind::ChartFailure && e.kind() != ErrorKind::InvalidArgument) {
        throw;
      }
    }
  }
  fail(ErrorKind::DegenerateConfiguration, "no generic point found for the local sum");
}

void merge_into(Json& body, const Json& extra) {
  for (const auto& [k, v] : extra.items()) body[k] = v;
}

Json with_command(const char* name, Json body) {
  Json out;
  out["command"] = name;
  merge_into(out, body);
  return out;
}

int cmd_writhe(const std::string& path, const std::optional<std::string>& point, bool check, std::uint64_t seed,
               std::ostream& out) {
  const CurveForms forms = curve_forms_from_json(load_json(path));
  const RationalCurve c(forms);
  const WritheOptions opts{seed};
  std::mt19937_64 rng(seed);
  Json body;
  body["curve"] = curve_to_json(forms);
  int code = kExitOk;
  if (!point && c.degree() == 4) {
    const WritheResult h = writhe_deg4(c);
    body["method"] = "hankel";
    merge_into(body, writhe_result_to_json(h));
    if (check) {
      const auto [q, l] = local_sum_at_random_point(c, rng, opts);
      const bool ok = gw_equal(h.gw, l.gw);
      body["check"] = {{"point", point_to_json(q)}, {"local_sum", writhe_result_to_json(l)}, {"consistent", ok}};
      if (!ok) code = kExitNegative;
    }
  } else {
    Point3 q;
    WritheResult l;
    if (point) {
      q = parse_point(*point);
      l = writhe_local_sum(c, q, opts);
    } else {
      std::tie(q, l) = local_sum_at_random_point(c, rng, opts);
    }
    body["method"] = "local-sum";
    body["point"] = point_to_json(q);
    merge_into(body, writhe_result_to_json(l));
    if (check) {
      if (c.degree() == 4) {
        const WritheResult h = writhe_deg4(c);
        const bool ok = gw_equal(h.gw, l.gw);
        body["check"] = {{"hankel", writhe_result_to_json(h)}, {"consistent", ok}};
        if (!ok) code = kExitNegative;
      } else {
        const auto [q2, l2] = local_sum_at_random_point(c, rng, opts);
        const bool ok = gw_equal(l.gw, l2.gw);
        body["check"] = {{"point", point_to_json(q2)}, {"local_sum", writhe_result_to_json(l2)}, {"consistent", ok}};
        if (!ok) code = kExitNegative;
      }
    }
  }
  out << with_command("writhe", std::move(body)).dump(2) << '\n';
  return code;
}

int cmd_writhe_local(const std::string& path, const std::string& point, const std::optional<std::string>& chart,
                     bool swap, std::uint64_t seed, std::ostream& out) {
  const CurveForms forms = curve_forms_from_json(load_json(path));
  const RationalCurve c(forms);
  const Point3 q = parse_point(point);
  LocalWritheOptions lo;
  lo.base.seed = seed;
  lo.swap_endpoints = swap;
  if (chart) {
    const auto l = parse_rational_list(*chart);
    if (l.size() != 4) fail(ErrorKind::ParseError, "a chart needs four coefficients");
    lo.chart = Chart::from_linear_form({l[0], l[1], l[2], l[3]});
  }
  GWClass total;
  Json locals = Json::array();
  for (auto& s : secants_through_point(c, q, lo.base)) {
    const NFElem d = local_writhe_det(c, q, s, lo);
    const GWClass cls = trace_form(d);
    total += cls;
    locals.push_back(local_to_json({std::move(s), d, cls}));
  }
  Json body;
  body["curve"] = curve_to_json(forms);
  body["point"] = point_to_json(q);
  body["locals"] = std::move(locals);
  body["sum"] = gw_to_json(total);
  out << with_command("writhe-local", std::move(body)).dump(2) << '\n';
  return kExitOk;
}

int cmd_gw(const std::string& path, const std::string& primes, std::ostream& out) {
  Json j = load_json(path);
  if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
  const SymBilForm m(matrix_from_json(j));
  std::optional<std::set<Integer>> ps;
  if (primes != "auto") {
    ps.emplace();
    for (const auto& p : parse_rational_list(primes)) {
      if (p.get_den() != 1 || p <= 1) fail(ErrorKind::ParseError, "--primes expects integers > 1");
      ps->insert(p.get_num());
    }
  }
  const GWClass c = gw_from_matrix(m);
  Json body;
  body["matrix"] = matrix_to_json(m.matrix());
  body["det"] = rational_to_json(determinant(m.matrix()));
  merge_into(body, gw_to_json(c, ps));
  out << with_command("gw", std::move(body)).dump(2) << '\n';
  return kExitOk;
}

int cmd_isotopic(const std::string& p1, const std::string& p2, int degree, std::ostream& out) {
  const CurveForms f1 = curve_forms_from_json(load_json(p1));
  const CurveForms f2 = curve_forms_from_json(load_json(p2));
  if (f1[0].degree != degree || f2[0].degree != degree) {
    fail(ErrorKind::DegenerateConfiguration, "both curves must have degree " + std::to_string(degree));
  }
  Json body;
  bool iso = false;
  if (degree == 3) {
    const EmbeddingDeg3 a(f1), b(f2);
    body["invariants"] = {rational_to_json(isotopy_invariant_deg3(a)), rational_to_json(isotopy_invariant_deg3(b))};
    body["modulo"] = "4th powers";
    iso = isotopic_deg3(a, b);
  } else {
    const RationalCurve a(f1), b(f2);
    const Deg4Invariant x = embedding_writhe_deg4(a), y = embedding_writhe_deg4(b);
    body["invariants"] = {{{"class", gw_to_json(x.gw)}, {"det", rational_to_json(x.det)}},
                          {{"class", gw_to_json(y.gw)}, {"det", rational_to_json(y.det)}}};
    body["modulo"] = "12th powers";
    iso = isotopic_deg4(a, b);
  }
  body["degree"] = degree;
  body["isotopic"] = iso;
  out << with_command("isotopic", std::move(body)).dump(2) << '\n';
  return iso ? kExitOk : kExitNegative;
}

std::vector<Rational> plucker_from_json(const Json& j, std::size_t nvars, std::size_t c) {
  if (j.is_object() && j.contains("line")) {
    const Json& l = j.at("line");
    if (c != 2 || !l.is_array() || l.size() != 2) fail(ErrorKind::ParseError, "'line' needs two points and c = 2");
    std::vector<Rational> p, q;
    for (const auto& x : l[0]) p.push_back(rational_from_json(x));
    for (const auto& x : l[1]) q.push_back(rational_from_json(x));
    if (p.size() != nvars || q.size() != nvars) fail(ErrorKind::ParseError, "line points have the wrong length");
    return plucker_line(p, q);
  }
  const Json& arr = (j.is_object() && j.contains("plucker")) ? j.at("plucker") : j;
  if (!arr.is_array()) fail(ErrorKind::ParseError, "expected a list of Pluecker coordinates");
  std::vector<Rational> w;
  for (const auto& x : arr) w.push_back(rational_from_json(x));
  return w;
}

int cmd_chow(const std::string& path, const std::optional<std::string>& eval, std::ostream& out) {
  Json j = load_json(path);
  if (j.is_object() && j.contains("matrices")) j = j.at("matrices");
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, "expected a list of linear-form matrices");
  std::vector<LinFormMatrix> as;
  for (const auto& m : j) as.push_back(linform_from_json(m));
  const PlueckerLinearMatrix g = gamma_from_resolution(as);
  Json body;
  body["gamma"] = plucker_matrix_to_json(g);
  if (eval) {
    const auto w = plucker_from_json(load_json(*eval), g.nvars, g.c);
    const Matrix v = plucker_eval(g, w);
    body["plucker"] = Json::array();
    for (const auto& x : w) body["plucker"].push_back(rational_to_json(x));
    body["value"] = matrix_to_json(v);
    if (v.rows() == v.cols()) {
      const Rational d = determinant(v);
      body["det"] = rational_to_json(d);
      if (v.is_symmetric() && sgn(d) != 0) body["class"] = gw_to_json(gw_from_matrix(SymBilForm(v)));
    }
  }
  out << with_command("chow", std::move(body)).dump(2) << '\n';
  return kExitOk;
}

int cmd_cazanave(const std::string& f, const std::string& g, std::ostream& out) {
  const PointedRationalMap m(parse_univariate(f), parse_univariate(g));
  const auto x = cazanave_phi(m);
  const CazanaveClass cls = cazanave_class(m);
  Json body;
  body["f"] = m.f.to_string("t");
  body["g"] = m.g.to_string("t");
  body["wedge"] = Json::array();
  for (const auto& v : x) body["wedge"].push_back(rational_to_json(v));
  body["hankel"] = matrix_to_json(hankel_matrix(m.f, m.g, 3).matrix());
  body["bezout"] = matrix_to_json(bezout_matrix(m.f, m.g, 3).matrix());
  body["det"] = rational_to_json(cls.det);
  body["class"] = gw_to_json(cls.gw);
  out << with_command("cazanave", std::move(body)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

std::uint64_t seed_from_environment() {
  const char* v = std::getenv("GW_WRITHE_SEED");
  if (v == nullptr || *v == '\0') return WritheOptions{}.seed;
  try {
    std::size_t used = 0;
    const std::uint64_t s = std::stoull(v, &used, 0);
    if (used != std::string(v).size()) throw std::invalid_argument("trailing characters");
    return s;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, std::string("GW_WRITHE_SEED is not an unsigned integer: '") + v + "'");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::uint64_t seed) {
  CLI::App app{"Arithmetic writhe, Grothendieck-Witt and Chow-form computations over Q", "gw-writhe"};
  app.require_subcommand(1);

  std::string curve, curve2, matrix_path, primes = "auto", f, g;
  std::optional<std::string> point, chart, eval;
  bool check = false, swap = false;
  int degree = 4;

  auto* w = app.add_subcommand("writhe", "Arithmetic writhe of a rational curve");
  w->add_option("curve", curve, "Curve JSON file")->required();
  w->add_option("--point", point, "Query point a,b,c,d for the local sum");
  w->add_flag("--check", check, "Compare the Hankel and local-sum computations");

  auto* wl = app.add_subcommand("writhe-local", "Per-secant local writhes through a point");
  wl->add_option("curve", curve, "Curve JSON file")->required();
  wl->add_option("--point", point, "Query point a,b,c,d")->required();
  wl->add_option("--chart", chart, "Linear form l0,l1,l2,l3 defining the affine chart");
  wl->add_flag("--swap", swap, "Exchange the endpoints of every secant");

  auto* gw = app.add_subcommand("gw", "Invariants of a symmetric matrix over Q");
  gw->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  gw->add_option("--primes", primes, "auto, or a comma-separated list of primes");

  auto* iso = app.add_subcommand("isotopic", "Decide isotopy of two rational embeddings");
  iso->add_option("curve1", curve, "First curve JSON file")->required();
  iso->add_option("curve2", curve2, "Second curve JSON file")->required();
  iso->add_option("--degree", degree, "3 or 4")->required()->check(CLI::IsMember({3, 4}));

  auto* chow = app.add_subcommand("chow", "Chow matrix of a linear resolution");
  chow->add_option("resolution", matrix_path, "Resolution JSON file")->required();
  chow->add_option("--eval", eval, "Pluecker point JSON file");

  auto* caz = app.add_subcommand("cazanave", "Pointed degree-3 map g/f");
  caz->add_option("f", f, "Monic cubic in t")->required();
  caz->add_option("g", g, "Polynomial in t of degree < 3")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    out << Json{{"error", "ParseError"}, {"message", e.what()}}.dump(2) << '\n';
    return kExitParse;
  }

  try {
    if (w->parsed()) return cmd_writhe(curve, point, check, seed, out);
    if (wl->parsed()) return cmd_writhe_local(curve, *point, chart, swap, seed, out);
    if (gw->parsed()) return cmd_gw(matrix_path, primes, out);
    if (iso->parsed()) return cmd_isotopic(curve, curve2, degree, out);
    if (chow->parsed()) return cmd_chow(matrix_path, eval, out);
    if (caz->parsed()) return cmd_cazanave(f, g, out);
  } catch (const MathError& e) {
    out << error_to_json(e).dump(2) << '\n';
    err << e.name() << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitParse;
}

}  // namespace gww
