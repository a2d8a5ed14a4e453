#pragma once

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "gww/rational.hpp"
#include "gww/unipoly.hpp"
#include "gww/writhe.hpp"

namespace gww {

/// Polynomial in r, s, t: exponent triple -> nonzero coefficient.
using RstPoly = std::map<std::array<int, 3>, Rational>;

/// Integer or p/q literals, variables r, s, t, binary + - *, ^ with a
/// nonnegative integer exponent, unary minus and parentheses. Juxtaposition
/// is not multiplication. Throws ParseError.
RstPoly parse_polynomial(std::string_view text);

/// A form in r, s that is homogeneous of the given degree, or a polynomial in
/// t = s/r of degree at most that, homogenized.
BinaryForm parse_binary_form(std::string_view text, int degree);
/// Univariate polynomial in t.
UniPoly parse_univariate(std::string_view text);

/// Comma-separated rationals, e.g. "1,0,-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace gww
