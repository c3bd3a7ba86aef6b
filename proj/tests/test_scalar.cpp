#include <cmath>
#include <random>

#include "doctest.h"
#include "flagpos/error.hpp"
#include "flagpos/scalar.hpp"

using namespace flagpos;

namespace {

Quad q(long a, long ad, long b = 0, long bd = 1) { return Quad(Rational(a, ad), Rational(b, bd)); }

// small random element; floats only as an independent sign oracle
Quad random_quad(std::mt19937_64& rng) {
  auto r = [&] { return Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1); };
  return Quad(r(), r());
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(quad_arith(ArithOp::Mul, q(1, 1, 1), q(-1, 1, 1)) == Quad(1));
  CHECK(quad_arith(ArithOp::Add, q(1, 2), q(1, 2)) == Quad(1));
  Quad d = quad_arith(ArithOp::Div, Quad(1), Quad::sqrt2());
  CHECK(d == q(0, 1, 1, 2));
  CHECK(d * Quad::sqrt2() == Quad(1));
  CHECK(Quad::sqrt2() * Quad::sqrt2() == Quad(2));
}

TEST_CASE("division by zero is an error") {
  try {
    quad_arith(ArithOp::Div, Quad(1), Quad(0));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("sign examples") {
  CHECK(quad_sign(Quad(0)) == 0);
  CHECK(quad_sign(q(-1, 1, 1)) == 1);
  CHECK(quad_sign(q(3, 1, -2)) == 1);
  CHECK(quad_sign(q(-3, 1, 2)) == -1);
  CHECK(quad_sign(q(1, 1, -1)) == -1);
  // 99/70 is just above sqrt2
  CHECK(quad_sign(q(99, 70, -1)) == 1);
  CHECK(quad_sign(q(-99, 70, 1)) == -1);
}

TEST_CASE("sign agrees with a floating point oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Quad x = random_quad(rng);
    double f = x.rat().get_d() + x.irr().get_d() * std::sqrt(2.0);
    int expect = f > 1e-12 ? 1 : (f < -1e-12 ? -1 : 0);
    if (std::abs(f) > 1e-9 || x.is_zero()) CHECK(quad_sign(x) == expect);
  }
}

TEST_CASE("sign is multiplicative and zero only at zero") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    Quad x = random_quad(rng), y = random_quad(rng);
    CHECK(quad_sign(x) * quad_sign(y) == quad_sign(quad_arith(ArithOp::Mul, x, y)));
    CHECK((quad_sign(x) == 0) == x.is_zero());
  }
}

TEST_CASE("field laws on random elements") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    Quad x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * (y * z) == (x * y) * z);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(x - x == Quad(0));
  }
}

TEST_CASE("literal parsing") {
  CHECK(parse_scalar("3") == Quad(3));
  CHECK(parse_scalar("-1/2") == q(-1, 2));
  CHECK(parse_scalar("1/2+3/4r2") == q(1, 2, 3, 4));
  CHECK(parse_scalar("1/2-3/4r2") == q(1, 2, -3, 4));
  CHECK(parse_scalar("-2r2") == q(0, 1, -2));
  CHECK(parse_scalar("4/6") == q(2, 3));
  for (const char* bad : {"", " 1", "1 ", "1/", "/2", "1/0", "1+r", "r2", "1+-2r2", "--1", "1.5", "2r2+1", "1 + 2r2", "abc"}) {
    CAPTURE(bad);
    try {
      parse_scalar(bad);
      FAIL("accepted a malformed literal");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("render then parse round trips") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 1000; ++i) {
    Quad x = random_quad(rng);
    CHECK(parse_scalar(render(x)) == x);
  }
  CHECK(render(Quad(0)) == "0");
  CHECK(render(q(0, 1, -1)) == "-1r2");
  CHECK(render(q(1, 2, 3, 4)) == "1/2+3/4r2");
}
