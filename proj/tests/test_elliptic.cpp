#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curve_points.hpp"
#include "oracles.hpp"
#include "sumprod/elliptic.hpp"

#include <stdexcept>

using namespace sumprod;
using testpts::field_generators;
using testpts::random_field_point;

namespace {

const Curve e297(135, 297);
const Curve e13122(3645, -13122);

Point pt(long x, long y) { return {QuadElem(x), QuadElem(y)}; }
Point pt_sqrt(long x, long l, long d) { return {QuadElem(x), QuadElem(Rat(0), Rat(l), Int(d))}; }

}  // namespace

TEST_CASE("curve construction and discriminant") {
  // Oracle: -16 (4 A^3 + 27 B^2) in 64-bit integers.
  const oracle::i64 disc297 = -16 * (4LL * 135 * 135 * 135 + 27LL * 297 * 297);
  CHECK(disc297 == -195570288);
  CHECK(curve_discriminant(e297) == disc297);
  CHECK(curve_discriminant(Curve(0, 1)) == -432);
  CHECK(curve_discriminant(Rat(0), Rat(0)) == 0);
  CHECK_THROWS_AS(Curve(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Curve(-3, 2), std::invalid_argument);
}

TEST_CASE("on_curve examples") {
  CHECK(on_curve(e297, pt(3, 27)));
  CHECK_FALSE(on_curve(e297, pt(0, 0)));
  CHECK(on_curve(quadratic_twist(e297, -1), pt(6, 27)));
  CHECK(on_curve(e297, Point::infinity()));
  CHECK(on_curve(e297, pt_sqrt(21, 27, 17)));
}

TEST_CASE("group law examples") {
  const Point p = pt(3, 27);
  CHECK(ec_add(e297, p, Point::infinity()) == p);
  CHECK(ec_add(e297, Point::infinity(), p) == p);
  CHECK(ec_add(e297, p, pt(3, -27)).is_infinity());
  CHECK(ec_add(e297, p, p) == pt(3, -27));
  CHECK(ec_scalar_mul(e297, p, 3).is_infinity());
  CHECK(ec_scalar_mul(e297, p, -1) == pt(3, -27));
  CHECK(ec_scalar_mul(e297, p, 0).is_infinity());
  CHECK_THROWS_AS(ec_add(e297, pt(0, 0), p), std::invalid_argument);
  CHECK_THROWS_AS(ec_neg(e297, pt(1, 1)), std::invalid_argument);
}

TEST_CASE("group axioms over Q") {
  const Curve tw = quadratic_twist(e297, -7);  // rank >= 1, so multiples are varied
  const Point g = pt(15, 27);
  std::vector<Point> pool;
  for (long k = -4; k <= 4; ++k) pool.push_back(ec_scalar_mul(tw, g, k));
  oracle::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const Point& p = pool[rng.range(0, pool.size() - 1)];
    const Point& q = pool[rng.range(0, pool.size() - 1)];
    const Point& r = pool[rng.range(0, pool.size() - 1)];
    const Point pq = ec_add(tw, p, q);
    CHECK(on_curve(tw, pq));
    CHECK(pq == ec_add(tw, q, p));
    CHECK(ec_add(tw, pq, r) == ec_add(tw, p, ec_add(tw, q, r)));
    CHECK(ec_add(tw, p, ec_neg(tw, p)).is_infinity());
  }
}

TEST_CASE("group axioms over Q(sqrt 17)") {
  const Int d(17);
  oracle::Rng rng(34);
  const auto gens = field_generators(e297, d);
  REQUIRE(gens.size() > 3);
  std::vector<Point> pool{Point::infinity(), pt(3, 27), pt_sqrt(21, 27, 17)};
  while (pool.size() < 12) pool.push_back(random_field_point(rng, e297, gens));
  for (int i = 0; i < 100; ++i) {
    const Point& p = pool[rng.range(0, pool.size() - 1)];
    const Point& q = pool[rng.range(0, pool.size() - 1)];
    const Point& r = pool[rng.range(0, pool.size() - 1)];
    const Point pq = ec_add(e297, p, q);
    CHECK(on_curve(e297, pq));
    CHECK(pq == ec_add(e297, q, p));
    CHECK(ec_add(e297, pq, r) == ec_add(e297, p, ec_add(e297, q, r)));
  }
}

TEST_CASE("trace map examples") {
  CHECK(trace_map(e297, pt_sqrt(21, 27, 17)).is_infinity());
  CHECK(trace_map(e297, pt(3, 27)) == pt(3, -27));
  CHECK(trace_map(e297, pt_sqrt(-15, -27, -7)).is_infinity());
  CHECK_THROWS_AS(trace_map(e297, pt(1, 2)), std::invalid_argument);
}

TEST_CASE("trace map lands in E(Q)") {
  oracle::Rng rng(35);
  int count = 0;
  int exceptional = 0;
  for (long d : {-7L, -1L, 5L, 17L, 101L}) {
    const auto gens = field_generators(e297, Int(d));
    for (int i = 0; i < 10; ++i) {
      const Point p = random_field_point(rng, e297, gens);
      if (!p.is_infinity() && !p.x().is_rational()) ++exceptional;
      const Point s = trace_map(e297, p);
      CHECK(s.is_rational());
      CHECK(on_curve(e297, s));
      CHECK(conj(s) == s);
      ++count;
    }
  }
  CHECK(count == 50);
  CHECK(exceptional > 5);
}

TEST_CASE("quadratic twist examples") {
  CHECK(quadratic_twist(e297, -1) == Curve(135, -297));
  CHECK(quadratic_twist(e297, 1) == e297);
  CHECK(quadratic_twist(e297, 17) == Curve(135 * 289, 297 * 4913));
  CHECK(quadratic_twist(e297, 17) == Curve(39015, 1459161));
  CHECK_THROWS_AS(quadratic_twist(e297, 0), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_twist(e297, 8), std::invalid_argument);
}

TEST_CASE("twist point map examples") {
  CHECK(twist_point_map(e297, pt_sqrt(21, 27, 17), 17) == pt(357, 7803));
  CHECK(twist_point_map(e297, pt_sqrt(-15, -27, -7), -7) == pt(105, -1323));
  // 357^3 + 39015 * 357 + 1459161 = 7803^2 in 64-bit integers
  CHECK(357LL * 357 * 357 + 39015LL * 357 + 1459161 == 7803LL * 7803);
  CHECK(105LL * 105 * 105 + 6615LL * 105 - 101871 == 1323LL * 1323);

  const Point back = untwist_point(e297, pt(6, 27), -1);
  CHECK(back == pt_sqrt(-6, 27, -1));
  CHECK(on_curve(e297, back));
  CHECK(twist_point_map(e297, back, -1) == pt(6, 27));

  CHECK_THROWS_AS(twist_point_map(e297, pt(3, 27), 17), std::invalid_argument);
  CHECK_THROWS_AS(twist_point_map(e297, pt_sqrt(21, 27, 17), -7), std::invalid_argument);
}

TEST_CASE("twist correspondence round-trips") {
  for (long d : {-7L, -1L, 17L, 101L}) {
    const Curve tw = quadratic_twist(e297, d);
    for (const Point& p : search_points(tw, {Int(2000), Int(2)})) {
      const Point back = untwist_point(e297, p, d);
      CHECK(on_curve(e297, back));
      CHECK(trace_map(e297, back).is_infinity());
      const Point again = twist_point_map(e297, back, d);
      CHECK(on_curve(tw, again));
      CHECK(again == p);
    }
  }
}

TEST_CASE("torsion checks") {
  CHECK(is_torsion(e297, pt(3, 27)));
  CHECK(torsion_order(e297, pt(3, 27)) == 3);
  CHECK_FALSE(is_torsion(quadratic_twist(e297, -1), pt(6, 27)));
  CHECK(is_torsion(e297, Point::infinity()));
  CHECK(torsion_order(e297, Point::infinity()) == 1);
  CHECK_THROWS_AS(is_torsion(e297, pt(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(is_torsion(e297, pt_sqrt(21, 27, 17)), std::invalid_argument);
}

TEST_CASE("Nagell-Lutz torsion examples") {
  const auto t297 = nagell_lutz_torsion(e297);
  CHECK(t297 == std::vector<Point>{Point::infinity(), pt(3, -27), pt(3, 27)});
  CHECK(torsion_structure(e297, t297) == "Z/3");

  // 27^3 + 3645 * 27 - 13122 = 324^2, and 27 is a root of the 3-division polynomial.
  CHECK(27LL * 27 * 27 + 3645LL * 27 - 13122 == 324LL * 324);
  CHECK(27LL * 27 * 27 * 27 + 7290LL * 27 * 27 - 52488LL * 27 - 4428675 == 0);
  const auto t3 = nagell_lutz_torsion(e13122);
  CHECK(t3 == std::vector<Point>{Point::infinity(), pt(27, -324), pt(27, 324)});
  CHECK(torsion_structure(e13122, t3) == "Z/3");

  const Curve z6(0, 1);
  const auto t6 = nagell_lutz_torsion(z6);
  CHECK(t6 == std::vector<Point>{Point::infinity(), pt(-1, 0), pt(0, -1), pt(0, 1), pt(2, -3), pt(2, 3)});
  CHECK(torsion_structure(z6, t6) == "Z/6");

  // y^2 = x^3 - x: full 2-torsion
  const Curve klein(-1, 0);
  const auto t22 = nagell_lutz_torsion(klein);
  CHECK(t22.size() == 4);
  CHECK(torsion_structure(klein, t22) == "Z/2 x Z/2");

  CHECK_THROWS_AS(nagell_lutz_torsion(Curve(make_rat(1, 2), 1)), std::invalid_argument);
}

TEST_CASE("torsion subgroups are closed and consistent") {
  const std::vector<Curve> curves{e297, e13122, Curve(0, 1), Curve(-1, 0), Curve(621, 9774), Curve(0, -432),
                                  Curve(-43, 166), Curve(-219, 1654)};
  for (const Curve& c : curves) {
    const auto group = nagell_lutz_torsion(c);
    for (const Point& p : group) {
      CHECK(is_torsion(c, p));
      CHECK(std::find(group.begin(), group.end(), ec_neg(c, p)) != group.end());
      for (const Point& q : group) CHECK(std::find(group.begin(), group.end(), ec_add(c, p, q)) != group.end());
      if (torsion_order(c, p) == 3) CHECK(division_polynomial3(c, p.x().a()) == 0);
    }
  }
  // y^2 = x^3 - 43x + 166 has a rational 7-torsion point (3, 8).
  CHECK(torsion_structure(Curve(-43, 166), nagell_lutz_torsion(Curve(-43, 166))) == "Z/7");
}

TEST_CASE("point search examples") {
  const auto tw7 = search_points(quadratic_twist(e297, -7), {Int(400), Int(1)});
  CHECK(std::find(tw7.begin(), tw7.end(), pt(15, 27)) != tw7.end());
  const auto tw17 = search_points(quadratic_twist(e297, 17), {Int(400), Int(1)});
  CHECK(std::find(tw17.begin(), tw17.end(), pt(357, 7803)) != tw17.end());
  CHECK_THROWS_AS(search_points(e297, {Int(0), Int(1)}), std::invalid_argument);
}

TEST_CASE("point search matches an integer-only oracle") {
  // x = p / e^2 on Y^2 = X^3 + 135 X + 297  <=>  p^3 + 135 p e^4 + 297 e^6 is a square.
  const long num = 3000, den = 4;
  std::vector<Point> expected;
  for (long e = 1; e <= den; ++e)
    for (long p = -num; p <= num; ++p) {
      long g = std::gcd(p, e);
      if (g != 1) continue;
      const oracle::i64 e2 = e * e, e4 = e2 * e2, e6 = e4 * e2;
      const oracle::i64 v = p * p * p + 135 * p * e4 + 297 * e6;
      if (!oracle::is_square64(v)) continue;
      const oracle::i64 y = oracle::isqrt64(v);
      const Rat x = make_rat(p, e2);
      expected.emplace_back(QuadElem(x), QuadElem(make_rat(y, e2 * e)));
      if (y != 0) expected.emplace_back(QuadElem(x), QuadElem(make_rat(-y, e2 * e)));
    }
  std::sort(expected.begin(), expected.end(), point_less);
  CHECK(search_points(e297, {Int(num), Int(den)}) == expected);
  CHECK(expected == std::vector<Point>{pt(3, -27), pt(3, 27)});
}

TEST_CASE("search finds non-integral points") {
  const auto hits = search_points(quadratic_twist(e297, 101), {Int(3000), Int(4)});
  const Point p(QuadElem(make_rat(2121, 4)), QuadElem(make_rat(275427, 8)));
  CHECK(std::find(hits.begin(), hits.end(), p) != hits.end());
  for (const Point& h : hits) CHECK(on_curve(quadratic_twist(e297, 101), h));
}
