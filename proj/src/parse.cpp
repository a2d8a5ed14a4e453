#include "gww/parse.hpp"

#include <cctype>
#include <string>

#include "gww/errors.hpp"

namespace gww {

namespace {

constexpr int kMaxExponent = 256;

void add_term(RstPoly& p, const std::array<int, 3>& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

RstPoly add(const RstPoly& a, const RstPoly& b, int sign) {
  RstPoly out = a;
  for (const auto& [e, c] : b) add_term(out, e, sign > 0 ? c : Rational(-c));
  return out;
}

RstPoly mul(const RstPoly& a, const RstPoly& b) {
  RstPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      const std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      for (int x : e) {
        if (x > kMaxExponent) fail(ErrorKind::ParseError, "exponent too large");
      }
      add_term(out, e, ca * cb);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RstPoly parse() {
    RstPoly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  RstPoly expr() {
    RstPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), 1);
      } else if (accept('-')) {
        acc = add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  RstPoly term() {
    RstPoly acc = unary();
    while (accept('*')) acc = mul(acc, unary());
    return acc;
  }

  RstPoly unary() {
    if (accept('-')) return add({}, unary(), -1);
    if (accept('+')) return unary();
    return power();
  }

  RstPoly power() {
    RstPoly base = atom();
    if (!accept('^')) return base;
    const std::string d = digits();
    if (d.size() > 4 || std::stoi(d) > kMaxExponent) error("exponent too large");
    RstPoly out{{{0, 0, 0}, Rational(1)}};
    for (int i = std::stoi(d); i > 0; --i) out = mul(out, base);
    return out;
  }

  RstPoly atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RstPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (c == 'r' || c == 's' || c == 't') {
      ++pos_;
      std::array<int, 3> e{0, 0, 0};
      e[c == 'r' ? 0 : (c == 's' ? 1 : 2)] = 1;
      return RstPoly{{e, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected denominator");
        lit += "/" + digits();
      }
      const Rational v = parse_rational(lit);
      RstPoly out;
      add_term(out, {0, 0, 0}, v);
      return out;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RstPoly parse_polynomial(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const MathError& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(ErrorKind::ParseError, e.what());
  }
}

BinaryForm parse_binary_form(std::string_view text, int degree) {
  if (degree < 0) fail(ErrorKind::ParseError, "negative degree");
  const RstPoly p = parse_polynomial(text);
  bool uses_t = false, uses_rs = false;
  for (const auto& [e, c] : p) {
    if (e[2] > 0) uses_t = true;
    if (e[0] > 0 || e[1] > 0) uses_rs = true;
  }
  if (uses_t && uses_rs) fail(ErrorKind::ParseError, "mix of t with r, s in '" + std::string(text) + "'");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  for (const auto& [e, c] : p) {
    int k = 0;
    if (uses_t) {
      k = e[2];
      if (k > degree) fail(ErrorKind::ParseError, "degree exceeds " + std::to_string(degree) + " in '" + std::string(text) + "'");
    } else {
      if (e[0] + e[1] != degree) {
        fail(ErrorKind::ParseError, "not homogeneous of degree " + std::to_string(degree) + ": '" + std::string(text) + "'");
      }
      k = e[1];
    }
    coeffs[static_cast<std::size_t>(k)] += c;
  }
  return BinaryForm(degree, std::move(coeffs));
}

UniPoly parse_univariate(std::string_view text) {
  const RstPoly p = parse_polynomial(text);
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p) {
    if (e[0] > 0 || e[1] > 0) fail(ErrorKind::ParseError, "expected a polynomial in t: '" + std::string(text) + "'");
    if (coeffs.size() <= static_cast<std::size_t>(e[2])) coeffs.resize(static_cast<std::size_t>(e[2]) + 1);
    coeffs[static_cast<std::size_t>(e[2])] += c;
  }
  return UniPoly(std::move(coeffs));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace gww
