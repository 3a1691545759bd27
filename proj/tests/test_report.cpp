#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sumprod/report.hpp"

#include <algorithm>
#include <stdexcept>

using namespace sumprod;

namespace {

SolveOptions quick() {
  SolveOptions o;
  o.bounds = {Int(400), Int(2)};
  o.scan_bound = 50;
  return o;
}

bool has_d(const Json& list, const std::string& d) {
  return std::any_of(list.begin(), list.end(), [&](const Json& e) { return e.at("d") == d; });
}

}  // namespace

TEST_CASE("builtin claims parse") {
  const Json& c = builtin_claims();
  CHECK(c.at("version") == 1);
  CHECK(c.at("systems").at("2").at("curve").at("a") == "135");
  CHECK(c.at("systems").at("2").at("triples").size() == 4);
  CHECK_THROWS(load_claims("/nonexistent/claims.json"));
}

TEST_CASE("report envelope") {
  const Json rep = curve_report(Int(2));
  CHECK(rep.at("schema_version") == 1);
  CHECK(rep.at("command") == "curve");
  CHECK(rep.at("inputs").at("n") == "2");
  CHECK(rep.at("results").at("short").at("a") == "135");
  CHECK(rep.at("results").at("short").at("b") == "297");
  CHECK(rep.at("status").at("exit_code") == kExitOk);
  CHECK(rep.at("comparison").at("agree") == true);
  CHECK(rep.at("summary").is_array());
}

TEST_CASE("reports are deterministic") {
  CHECK(solve_report(Int(2), quick()).dump() == solve_report(Int(2), quick()).dump());
  CHECK(torsion_report(135, 297).dump() == torsion_report(135, 297).dump());
  const std::string text = render_text(curve_report(Int(3)));
  CHECK(text.find("A=3645 B=-13122") != std::string::npos);
  CHECK(text.find("status: ok") != std::string::npos);
}

TEST_CASE("solve comparison flags n = 2") {
  const Json rep = solve_report(Int(2), quick());
  const Json& cmp = rep.at("comparison");
  CHECK(cmp.at("agree") == false);
  CHECK(rep.at("status").at("exit_code") == kExitFailure);
  CHECK(has_d(cmp.at("unreproduced"), "101"));
  CHECK(has_d(cmp.at("extra"), "5"));
  CHECK(cmp.at("reproduced").size() == 3);

  const Json& triples = cmp.at("triples");
  REQUIRE(triples.size() == 4);
  for (const Json& t : triples) {
    const bool is_101 = t.at("claimed").at("r") == "-8";
    CHECK(t.at("verified") == !is_101);
    CHECK(t.at("reproduced") == !is_101);
    if (is_101) CHECK(t.at("reason") == "s not an algebraic integer: norm = -1/4 not in Z");
  }

  const Json& res = rep.at("results");
  CHECK(res.at("all_verified") == true);
  CHECK(res.at("certificate").at("holds") == true);
  for (const Json& rec : res.at("records")) {
    CHECK(rec.at("on_curve") == true);
    CHECK(rec.at("class") == "non-exceptional");
  }
}

TEST_CASE("torsion and twist reports") {
  const Json t = torsion_report(135, 297);
  CHECK(t.at("results").at("structure") == "Z/3");
  CHECK(t.at("comparison").at("agree") == true);

  const Json tw = twist_report(135, 297, Int(-7), {Int(400), Int(1)});
  CHECK(tw.at("status").at("exit_code") == kExitOk);
  CHECK(tw.dump().find("\"15\"") != std::string::npos);
}

TEST_CASE("verify report") {
  const Json ok = verify_report(Int(2), parse_quad("-2"), parse_quad("2 + sqrt(5)"), parse_quad("2 - sqrt(5)"));
  CHECK(ok.at("status").at("exit_code") == kExitOk);
  const Json bad =
      verify_report(Int(2), parse_quad("-8"), parse_quad("(10 + sqrt(101))/2"), parse_quad("(10 - sqrt(101))/2"));
  CHECK(bad.at("status").at("exit_code") == kExitFailure);
}

TEST_CASE("full report covers every n") {
  const Json rep = full_report({Int(1), Int(2)}, quick());
  CHECK(rep.at("command") == "report");
  CHECK(rep.dump().find("\"101\"") != std::string::npos);
}

TEST_CASE("exact values serialize as strings") {
  CHECK(to_json(parse_quad("(1 + sqrt(-7))/2")) == "(1 + 1*sqrt(-7))/2");
  CHECK(to_json(Point::infinity()).at("infinity") == true);
  const Json p = to_json(Point(QuadElem(3), QuadElem(27)));
  CHECK(p.at("x") == "3");
  CHECK(p.at("y") == "27");
}
