#include "doctest.h"

#include <cmath>

#include "conegraph/scalar.hpp"
#include "oracles.hpp"

using conegraph::Error;
using conegraph::ErrorCode;
using conegraph::Rational;
using conegraph::Scalar;

TEST_CASE("exact arithmetic is closed under + - *") {
  Scalar a = Scalar::exact(1, 1);    // 1 + sqrt3
  Scalar b = Scalar::exact(1, -1);   // 1 - sqrt3
  Scalar prod = a * b;               // 1 - 3 = -2
  CHECK(prod == Scalar::from_int(-2));
  CHECK((a + b) == Scalar::from_int(2));
  CHECK((a - b) == Scalar::exact(0, 2));
  CHECK(prod.sign() == -1);
  CHECK(std::abs(a.to_double() - 2.7320508075688772) < 1e-14);
}

TEST_CASE("quadratic sign handles opposite rational signs") {
  CHECK(Scalar::exact(-5, 3).sign() == 1);    // 3*sqrt3 = 5.196 > 5
  CHECK(Scalar::exact(-6, 3).sign() == -1);
  CHECK(Scalar::exact(7, -4).sign() == 1);    // 7 - 6.928
  CHECK(Scalar::exact(-7, 4).sign() == -1);
  CHECK(Scalar::exact(0, 0).sign() == 0);
  CHECK(Scalar::exact(0, Rational(-1, 1000000)).sign() == -1);
  CHECK(Scalar::exact(Rational(1, 7), 0).sign() == 1);
}

TEST_CASE("quadratic sign matches high-precision evaluation") {
  oracle::SplitMix rng(20240811);
  for (int t = 0; t < 1000000; ++t) {
    long long an = rng.range(-1000, 1000);
    long long ad = rng.range(1, 60);
    long long bn = rng.range(-1000, 1000);
    long long bd = rng.range(1, 60);
    int expected = oracle::sign_sqrt3_highprec(an, ad, bn, bd);
    int got = Scalar::sign_quadratic(Rational(an, ad), Rational(bn, bd));
    REQUIRE(got == expected);
  }
}

TEST_CASE("float mode guards the ambiguous band") {
  Scalar tiny = Scalar::approx(1e-12, 1e-9);
  CHECK_THROWS_AS((void)tiny.sign(), Error);
  try {
    (void)tiny.sign();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousSign);
  }
  Scalar big = Scalar::approx(2.5, 1e-9);
  CHECK(big.sign() == 1);
  CHECK((big * big).sign() == 1);
  CHECK(((-big) + big).is_exact() == false);
}

TEST_CASE("mixing exact and float scalars is an error") {
  Scalar e = Scalar::from_int(1);
  Scalar f = Scalar::approx(1.0, 1e-9);
  CHECK_THROWS_AS((void)(e + f), Error);
  CHECK_THROWS_AS((void)(e * f), Error);
}

TEST_CASE("rational parsing") {
  using conegraph::rational_from_string;
  using conegraph::rational_to_string;
  CHECK(rational_from_string("0.1") == Rational(1, 10));
  CHECK(rational_from_string("-4.25") == Rational(-17, 4));
  CHECK(rational_from_string("3/7") == Rational(3, 7));
  CHECK(rational_from_string("-12") == Rational(-12));
  CHECK(rational_to_string(Rational(1, 10)) == "1/10");
  CHECK(rational_to_string(Rational(-12)) == "-12");
  CHECK_THROWS_AS(rational_from_string("abc"), Error);
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string(""), Error);
}
