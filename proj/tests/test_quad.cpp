#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sumprod/quad.hpp"

#include <stdexcept>

using namespace sumprod;

namespace {

QuadElem q(long a, long b, long d) { return QuadElem(Rat(a), Rat(b), Int(d)); }
QuadElem half(long a, long b, long d) { return QuadElem(make_rat(a, 2), make_rat(b, 2), Int(d)); }

}  // namespace

TEST_CASE("field arithmetic examples") {
  CHECK(q(2, 1, 5) + q(2, -1, 5) == QuadElem(4));
  CHECK(half(1, 1, -7) * half(1, -1, -7) == QuadElem(2));
  CHECK(q(2, 1, 5) * q(2, -1, 5) == QuadElem(-1));
  CHECK(q(2, 1, 5) - q(2, 1, 5) == QuadElem(0));
  CHECK(q(2, 1, 5) / q(2, 1, 5) == QuadElem(1));
  CHECK(QuadElem(1) / q(0, 1, -1) == q(0, -1, -1));  // 1/i = -i
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(q(1, 1, 5) + q(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(q(1, 1, 5) / QuadElem(0), std::domain_error);
  CHECK_THROWS_AS(q(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(q(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(q(1, 1, 20), std::invalid_argument);
  CHECK_THROWS_AS(q(1, 1, -4), std::invalid_argument);
}

TEST_CASE("rationals mix with any field") {
  const QuadElem seven(7);
  CHECK_NOTHROW(seven + q(1, 1, 5));
  CHECK_NOTHROW(seven * q(1, 1, -3));
  CHECK((seven + q(1, 1, 5)).d() == 5);
  // b = 0 elements from different fields compare by value
  CHECK(QuadElem(Rat(3), Rat(0), Int(5)) == QuadElem(Rat(3), Rat(0), Int(-1)));
  CHECK_NOTHROW(QuadElem(Rat(3), Rat(0), Int(5)) + q(1, 1, -1));
}

TEST_CASE("conjugation, norm, trace examples") {
  CHECK(conj(q(2, 1, 5)) == q(2, -1, 5));
  CHECK(conj(QuadElem(7)) == QuadElem(7));
  CHECK(conj(half(3, -1, 17)) == half(3, 1, 17));
  CHECK(norm(half(3, 1, 17)) == -2);              // (9 - 17) / 4
  CHECK(norm(half(10, 1, 101)) == make_rat(-1, 4));  // (100 - 101) / 4
  CHECK(trace(q(2, 1, 5)) == 4);
}

TEST_CASE("ring of integers membership examples") {
  CHECK(is_ok_integer(half(1, 1, -7)));
  CHECK_FALSE(is_ok_integer(half(10, 1, 101)));
  CHECK(is_ok_integer(q(2, 1, 5)));
  CHECK(is_ok_integer(half(1, 1, 5)));
  CHECK_FALSE(is_ok_integer(half(1, 1, 2)));   // 2 = 2 mod 4
  CHECK_FALSE(is_ok_integer(half(1, 1, -1)));  // -1 = 3 mod 4
  CHECK_FALSE(is_ok_integer(half(1, 0, 5)));   // 1/2
  CHECK_FALSE(is_ok_integer(QuadElem(make_rat(3, 2))));
}

TEST_CASE("conjugation is an involution and a ring homomorphism") {
  oracle::Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Int d(oracle::sample_fields()[rng.range(0, oracle::sample_fields().size() - 1)]);
    const QuadElem x = rng.quad(d), y = rng.quad(d);
    CHECK(conj(conj(x)) == x);
    CHECK(conj(x + y) == conj(x) + conj(y));
    CHECK(conj(x * y) == conj(x) * conj(y));
  }
}

TEST_CASE("norm is multiplicative") {
  oracle::Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    const Int d(oracle::sample_fields()[rng.range(0, oracle::sample_fields().size() - 1)]);
    const QuadElem x = rng.quad(d), y = rng.quad(d);
    CHECK(norm(x * y) == norm(x) * norm(y));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("coordinate and trace/norm membership tests agree") {
  oracle::Rng rng(23);
  int integral = 0;
  for (int i = 0; i < 1000; ++i) {
    const Int d(oracle::sample_fields()[rng.range(0, oracle::sample_fields().size() - 1)]);
    // Half-integers hit both branches often.
    QuadElem x(make_rat(Int(rng.range(-30, 30)), Int(rng.range(1, 2))),
               make_rat(Int(rng.range(1, 30) * (rng.range(0, 1) ? 1 : -1)), Int(rng.range(1, 2))), d);
    const bool lib = is_ok_integer(x);
    CHECK(lib == oracle::integral_by_trace_norm(x));
    integral += lib;
  }
  CHECK(integral > 100);
}

TEST_CASE("rational members of O_K are integers") {
  for (long d : oracle::sample_fields())
    for (long num = -12; num <= 12; ++num)
      for (long den = 1; den <= 4; ++den) {
        const QuadElem x(make_rat(num, den), Rat(0), Int(d));
        CHECK(is_ok_integer(x) == is_integer(make_rat(num, den)));
      }
}

TEST_CASE("square roots inside the field") {
  oracle::Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    const Int d(oracle::sample_fields()[rng.range(0, oracle::sample_fields().size() - 1)]);
    const QuadElem x = rng.quad(d);
    const auto root = square_root_exact(x * x);
    REQUIRE(root.has_value());
    CHECK(*root * *root == x * x);
  }
  CHECK_FALSE(square_root_exact(q(1, 1, 5)).has_value());
  CHECK(square_root_exact(QuadElem(-4), Int(-1)) == q(0, 2, -1));
  CHECK(square_root_exact(QuadElem(20), Int(5)) == q(0, 2, 5));
  CHECK_FALSE(square_root_exact(QuadElem(3), Int(5)).has_value());
}

TEST_CASE("wire format") {
  CHECK(to_wire(half(10, 1, 101)) == "(10 + 1*sqrt(101))/2");
  CHECK(to_wire(half(10, -1, 101)) == "(10 - 1*sqrt(101))/2");
  CHECK(to_wire(q(2, 1, 5)) == "2 + 1*sqrt(5)");
  CHECK(to_wire(q(0, -1, -1)) == "0 - 1*sqrt(-1)");
  CHECK(to_wire(QuadElem(make_rat(-1, 4))) == "-1/4");
  CHECK(to_wire(QuadElem(Rat(7), Rat(0), Int(5))) == "7");

  CHECK(parse_quad("(10+1*sqrt(101))/2") == half(10, 1, 101));
  CHECK(parse_quad("(10-1*sqrt(101))/2") == half(10, -1, 101));
  CHECK(parse_quad("2 + sqrt(5)") == q(2, 1, 5));
  CHECK(parse_quad("-sqrt(-1)") == q(0, -1, -1));
  CHECK(parse_quad("sqrt(20)") == q(0, 2, 5));
  CHECK(parse_quad("sqrt(9)") == QuadElem(3));
  CHECK(parse_quad("1/2 + 3/2*sqrt(5)") == half(1, 3, 5));
  CHECK(parse_quad("-3/2") == QuadElem(make_rat(-3, 2)));
  CHECK(parse_quad("(1 - 1*sqrt(-7))/2") == half(1, -1, -7));

  for (const char* bad : {"", "2 +", "(1 + sqrt(5)", "(1 + sqrt(5))/0", "1 + 2", "sqrt(5) + sqrt(5)", "x", "2*3",
                          "(1+sqrt(5))/-2", "1 sqrt(5)"})
    CHECK_THROWS_AS(parse_quad(bad), std::invalid_argument);
}

TEST_CASE("wire format round-trips bit-exactly") {
  oracle::Rng rng(25);
  for (int i = 0; i < 500; ++i) {
    const Int d(oracle::sample_fields()[rng.range(0, oracle::sample_fields().size() - 1)]);
    const QuadElem x = i % 5 == 0 ? QuadElem(rng.rat(50, 6)) : rng.quad(d, 50, 6);
    const std::string text = to_wire(x);
    const QuadElem back = parse_quad(text);
    CHECK(back == x);
    CHECK(to_wire(back) == text);
  }
}
