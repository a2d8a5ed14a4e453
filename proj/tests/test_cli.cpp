#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "gww/cli.hpp"
#include "gww/errors.hpp"
#include "gww/parse.hpp"

using namespace gww;

namespace {

struct Run {
  int code;
  nlohmann::json out;
};

std::string data(const std::string& name) { return std::string(GWW_DATA_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, 7);
  return {code, nlohmann::json::parse(out.str())};
}

}  // namespace

TEST_CASE("binary form parsing") {
  CHECK(parse_binary_form("2*r^2 - r*s + 1/2*s^2", 2).to_string() == "2*r^2 - r*s + 1/2*s^2");
  // t = s/r, homogenized to the requested degree.
  CHECK(parse_binary_form("1 + t^2", 3).to_string() == "r^3 + r*s^2");
  CHECK(parse_binary_form("(r - s)^2", 2).to_string() == "r^2 - 2*r*s + s^2");
  CHECK(parse_binary_form("-(s)", 1).to_string() == "-s");
  CHECK_THROWS_AS(parse_binary_form("r s", 2), MathError);
  CHECK_THROWS_AS(parse_binary_form("r^2 + s", 2), MathError);
  CHECK_THROWS_AS(parse_binary_form("r*t", 2), MathError);
  CHECK_THROWS_AS(parse_binary_form("t^4", 3), MathError);
  CHECK_THROWS_AS(parse_binary_form("r^", 1), MathError);
  CHECK(parse_univariate("t^3 - t").degree() == 3);
  CHECK(parse_rational_list(" 1, -1/2 ,3").size() == 3);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), MathError);
}

TEST_CASE("writhe command") {
  const Run hankel = run({"writhe", data("quartic.json")});
  CHECK(hankel.code == kExitOk);
  CHECK(hankel.out["method"] == "hankel");
  CHECK(hankel.out["det"] == "-1");
  CHECK(hankel.out["rank"] == 3);
  CHECK(hankel.out["signature"] == 1);
  CHECK(hankel.out["disc"] == "-1");

  const Run local = run({"writhe", data("quartic.json"), "--point", "1,0,0,1", "--check"});
  CHECK(local.code == kExitOk);
  REQUIRE(local.out["locals"].size() == 3);
  CHECK(local.out["locals"][0]["class"]["class"] == "<-2>");
  CHECK(local.out["locals"][1]["class"]["class"] == "<2>");
  CHECK(local.out["locals"][2]["class"]["class"] == "<1>");
  CHECK(local.out["check"]["consistent"] == true);

  const Run negative = run({"writhe", data("quartic.json"), "--point", "-1,2,3,5"});
  CHECK(negative.code == kExitOk);
  CHECK(negative.out["point"][0] == "-1");
  CHECK(negative.out["disc"] == "-1");
}

TEST_CASE("exit codes and error objects") {
  const Run bad = run({"writhe", data("bad.json")});
  CHECK(bad.code == kExitInvalid);
  CHECK(bad.out["error"] == "NotEmbedding");

  const Run on_curve = run({"writhe", data("quartic.json"), "--point", "1,1,1,1"});
  CHECK(on_curve.code == kExitInvalid);
  CHECK(on_curve.out["error"] == "PointOnCurve");

  const Run missing = run({"writhe", data("no_such_file.json")});
  CHECK(missing.code == kExitParse);
  CHECK(missing.out["error"] == "ParseError");

  const Run garbled = run({"writhe", data("quartic.json"), "--point", "1,0,x,1"});
  CHECK(garbled.code == kExitParse);

  const Run nonsym = run({"gw", data("nonsymmetric.json")});
  CHECK(nonsym.code == kExitParse);
  CHECK(nonsym.out["error"] == "InvalidArgument");

  CHECK(run({}).code == kExitParse);
}

TEST_CASE("gw command") {
  const Run hyp = run({"gw", data("hyperbolic.json")});
  CHECK(hyp.code == kExitOk);
  CHECK(hyp.out["signature"] == 0);
  CHECK(hyp.out["disc"] == "-1");

  const Run id = run({"gw", data("identity3.json"), "--primes", "3,5"});
  CHECK(id.code == kExitOk);
  CHECK(id.out["hasse"]["3"] == 1);
  CHECK(id.out["hasse"]["5"] == 1);
}

TEST_CASE("isotopic command") {
  CHECK(run({"isotopic", data("quartic.json"), data("quartic_moved.json"), "--degree", "4"}).code == kExitOk);
  CHECK(run({"isotopic", data("quartic.json"), data("quartic_doubled.json"), "--degree", "4"}).code ==
        kExitNegative);
  CHECK(run({"isotopic", data("cubic.json"), data("cubic_doubled.json"), "--degree", "3"}).code == kExitNegative);
  CHECK(run({"isotopic", data("cubic.json"), data("cubic.json"), "--degree", "3"}).code == kExitOk);
  CHECK(run({"isotopic", data("quartic.json"), data("cubic.json"), "--degree", "4"}).code == kExitInvalid);
}

TEST_CASE("chow command") {
  const Run meets = run({"chow", data("twisted_cubic_resolution.json"), "--eval", data("secant_line.json")});
  CHECK(meets.code == kExitOk);
  CHECK(meets.out["det"] == "0");
  CHECK(meets.out["gamma"]["coeff"].size() == 6);

  const Run misses = run({"chow", data("twisted_cubic_resolution.json"), "--eval", data("disjoint_line.json")});
  CHECK(misses.code == kExitOk);
  CHECK(misses.out["det"] == "-1");
  CHECK(misses.out["class"]["signature"] == 1);
}

TEST_CASE("cazanave command") {
  const Run r = run({"cazanave", "t^3 - t", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out["det"] == "-1");
  CHECK(r.out["hankel"] == nlohmann::json::parse(R"([["0","0","1"],["0","1","0"],["1","0","1"]])"));
  CHECK(run({"cazanave", "2*t^3", "1"}).code == kExitParse);
}
