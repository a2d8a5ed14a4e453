#pragma once

#include <json.hpp>
#include <optional>
#include <set>

#include "gww/chow.hpp"
#include "gww/errors.hpp"
#include "gww/gw.hpp"
#include "gww/writhe.hpp"

namespace gww {

using Json = nlohmann::ordered_json;

// Every number is written as an exact decimal string "p/q". Readers accept
// strings and JSON integers; anything else raises ParseError.

Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"class", "diag", "rank", "signature", "disc", "hasse": {"2": .., "inf": ..}}
/// with diag normalized to squarefree integers.
Json gw_to_json(const GWClass& c, const std::optional<std::set<Integer>>& primes = std::nullopt);
GWClass gw_from_json(const Json& j);

/// {"degree": n, "forms": ["r^4", ...]}
Json curve_to_json(const CurveForms& f);
CurveForms curve_forms_from_json(const Json& j);

Json point_to_json(const Point3& p);
Point3 point_from_json(const Json& j);

/// {"rows", "cols", "nvars", "coeff": [matrix for x_0, ...]}
Json linform_to_json(const LinFormMatrix& m);
LinFormMatrix linform_from_json(const Json& j);
Json plucker_matrix_to_json(const PlueckerLinearMatrix& m);

Json secant_to_json(const SecantDatum& s);
Json local_to_json(const LocalContribution& l);
Json writhe_result_to_json(const WritheResult& r);

Json error_to_json(const MathError& e);

}  // namespace gww
