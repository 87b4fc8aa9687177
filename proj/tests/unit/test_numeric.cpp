#include <doctest.h>

#include <cmath>

#include "betathermo/certified.hpp"
#include "betathermo/errors.hpp"
#include "betathermo/numeric.hpp"

using namespace betathermo;

TEST_CASE("rational floor/ceil behave on negatives and integers") {
  CHECK(rfloor(Rational(7, 2)) == 3);
  CHECK(rceil(Rational(7, 2)) == 4);
  CHECK(rfloor(Rational(-7, 2)) == -4);
  CHECK(rceil(Rational(-7, 2)) == -3);
  CHECK(rfloor(Rational(6, 2)) == 3);
  CHECK(rceil(Rational(6, 2)) == 3);
  CHECK(is_integral(Rational(6, 2)));
  CHECK(!is_integral(Rational(7, 2)));
}

TEST_CASE("dyadic outward rounding brackets the value") {
  Rational x(1, 3);
  for (unsigned bits : {4u, 16u, 53u}) {
    Rational lo = round_down(x, bits), hi = round_up(x, bits);
    CHECK(lo <= x);
    CHECK(x <= hi);
    CHECK(hi - lo <= Rational(1, Integer(1) << (bits - 1)));
  }
  // exact dyadics round to themselves
  CHECK(round_down(Rational(3, 8), 3) == Rational(3, 8));
  CHECK(round_up(Rational(3, 8), 3) == Rational(3, 8));
}

TEST_CASE("decimal literals parse exactly") {
  int places = -1;
  CHECK(rational_from_decimal("1.84", &places) == Rational(46, 25));
  CHECK(places == 2);
  CHECK(rational_from_decimal("2", &places) == 2);
  CHECK(places == 0);
  CHECK(rational_from_decimal("0.5", &places) == Rational(1, 2));
}

TEST_CASE("quadratic field arithmetic: golden ratio satisfies x^2 = x + 1") {
  QuadExt phi(Rational(1, 2), Rational(1, 2), 5);  // (1 + sqrt 5) / 2
  QuadExt sq = phi * phi;
  QuadExt expect = phi + QuadExt(Rational(1));
  CHECK(sq == expect);
  CHECK(phi.sign() == 1);
  CHECK(phi.compare(Rational(1)) == 1);
  CHECK(phi.compare(Rational(2)) == -1);
  CHECK(!phi.is_integer());
  CHECK(phi.floor() == 1);
  CHECK(phi.ceil() == 2);
  CHECK(phi.approx() == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
}

TEST_CASE("perfect-square radicands fold into the rational part") {
  QuadExt two(Rational(0), Rational(1), 4);  // sqrt 4
  CHECK(two.is_rational());
  CHECK(two.rat() == 2);
  CHECK(two.is_integer());
}

TEST_CASE("mixed quadratic fields are rejected") {
  QuadExt a(Rational(0), Rational(1), 2);
  QuadExt b(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(a + b, InvalidInput);
  CHECK_THROWS_AS(a * b, InvalidInput);
}

TEST_CASE("parse_beta accepts the documented forms") {
  SUBCASE("rational") {
    CertifiedReal b = parse_beta("3/2");
    REQUIRE(b.is_exact());
    CHECK(b.exact->rat() == Rational(3, 2));
  }
  SUBCASE("integer") {
    CertifiedReal b = parse_beta("2");
    REQUIRE(b.is_exact());
    CHECK(b.exact_integer());
  }
  SUBCASE("quadratic") {
    CertifiedReal b = parse_beta("(1+sqrt 5)/2");
    REQUIRE(b.is_exact());
    CHECK(b.exact->approx() == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  }
  SUBCASE("quadratic with parens and coefficient") {
    CertifiedReal b = parse_beta("(3+2*sqrt(2))/4");
    REQUIRE(b.is_exact());
    CHECK(b.exact->approx() ==
          doctest::Approx((3.0 + 2.0 * std::sqrt(2.0)) / 4.0).epsilon(1e-14));
  }
  SUBCASE("bare square root") {
    CertifiedReal b = parse_beta("sqrt(2)");
    REQUIRE(b.is_exact());
    CHECK(b.exact->approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  }
  SUBCASE("decimal becomes a half-ulp interval") {
    CertifiedReal b = parse_beta("1.8392867552");
    CHECK(!b.is_exact());
    CHECK(b.lo < b.hi);
    CHECK(to_double(b.hi - b.lo) == doctest::Approx(1e-10).epsilon(1e-3));
    CHECK(b.midpoint() == doctest::Approx(1.8392867552).epsilon(1e-12));
  }
  SUBCASE("garbage is rejected") {
    CHECK_THROWS_AS(parse_beta("wat"), InvalidInput);
    CHECK_THROWS_AS(parse_beta(""), InvalidInput);
    CHECK_THROWS_AS(parse_beta("sqrt(-1)"), InvalidInput);
  }
}

TEST_CASE("certified reals from rationals have zero width") {
  CertifiedReal b = CertifiedReal::from_rational(Rational(3, 2));
  CHECK(b.lo == b.hi);
  CHECK(b.width() == 0.0);
}
