#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "betathermo/certified.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/errors.hpp"
#include "betathermo/presets.hpp"

using namespace betathermo;

namespace {
DigitSeq seq(std::vector<int> digits, int alphabet) {
  DigitSeq d;
  d.digits = std::move(digits);
  d.alphabet = alphabet;
  check_structure(d);
  return d;
}
}  // namespace

TEST_CASE("golden base expands to alternating digits with a period certificate") {
  DigitSeq d = expand_one(parse_beta("(1+sqrt 5)/2"), 20);
  REQUIRE(d.depth() >= 20);
  CHECK(d.alphabet == 2);
  for (int i = 1; i <= 20; ++i) CHECK(d.digit(i) == (i % 2 == 1 ? 1 : 0));
  REQUIRE(d.periodicity.has_value());
  CHECK(d.periodicity->preperiod == 0);
  CHECK(d.periodicity->period == 2);
  CHECK(d.digit(1001) == 1);  // periodic extension past the stored depth
}

TEST_CASE("rational 3/2 expands exactly to the known prefix") {
  DigitSeq d = expand_one(parse_beta("3/2"), 32);
  const std::vector<int> prefix{1, 0, 1, 0, 0, 0, 0, 0, 1};
  REQUIRE(d.depth() >= static_cast<int>(prefix.size()));
  for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(d.digits[i] == prefix[i]);
  CHECK(!d.periodicity.has_value());
  CHECK_THROWS_AS(d.digit(33), DepthExceeded);
}

TEST_CASE("base 5/2 expands over a three-letter alphabet") {
  DigitSeq d = expand_one(parse_beta("5/2"), 16);
  CHECK(d.alphabet == 3);
  const std::vector<int> prefix{2, 1, 0, 1, 1, 1, 0};
  for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(d.digits[i] == prefix[i]);
}

TEST_CASE("decimal input expands through certified interval arithmetic") {
  // the rational path is exact, so it serves as the reference here
  DigitSeq d = expand_one(parse_beta("1.5000000000"), 20);
  DigitSeq exact = expand_one(parse_beta("3/2"), 20);
  for (int i = 1; i <= 20; ++i) CHECK(d.digit(i) == exact.digit(i));
  CHECK(!d.periodicity.has_value());  // intervals cannot certify periodicity
}

TEST_CASE("decimals near bases with recurring unit remainders stay ambiguous") {
  // For the exact tribonacci root the third recurrence product is exactly 1,
  // so every interval around it straddles a ceiling boundary: neighbors on
  // either side genuinely disagree about digit 3. The expansion must refuse
  // rather than guess.
  CHECK_THROWS_AS(expand_one(parse_beta("1.8392867552"), 10), PrecisionExhausted);
}

TEST_CASE("integer bases are rejected") {
  CHECK_THROWS_AS(expand_one(parse_beta("2"), 8), IntegerBeta);
  CHECK_THROWS_AS(expand_one(parse_beta("3"), 8), IntegerBeta);
}

TEST_CASE("an interval straddling an integer cannot fix the alphabet") {
  // "2.0" means [1.95, 2.05], so ceil(beta) is ambiguous at any precision
  CHECK_THROWS_AS(expand_one(parse_beta("2.0"), 8), PrecisionExhausted);
}

TEST_CASE("admissibility validation finds the first violating shift") {
  DigitSeq bad = seq({1, 0, 1, 1}, 2);
  AdmissibilityReport rep = validate_admissible(bad);
  CHECK(!rep.admissible);
  CHECK(rep.shift == 2);
  CHECK(rep.position == 2);

  DigitSeq good = seq({1, 0, 1, 0, 0, 0, 0, 0, 1}, 2);
  CHECK(validate_admissible(good).admissible);
}

TEST_CASE("a stored zero tail raises a warning, not a failure") {
  DigitSeq d = seq({1, 0, 1, 0, 0}, 2);
  AdmissibilityReport rep = validate_admissible(d);
  CHECK(rep.admissible);
  CHECK(rep.zero_tail_warning);

  DigitSeq golden = make_preset("golden").digits;
  CHECK(!validate_admissible(golden).zero_tail_warning);
}

TEST_CASE("base recovery from digits brackets the true base tightly") {
  Rational tol(1, Integer(1) << 40);
  SUBCASE("golden: periodic closed form") {
    BetaInterval bi = beta_from_digits(make_preset("golden").digits, tol);
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(bi.midpoint() - phi) < 1e-9);
    CHECK(bi.width() < 1e-9);
  }
  SUBCASE("three-halves: truncated two-sided bracket") {
    BetaInterval bi = beta_from_digits(make_preset("three-halves", 64).digits, tol);
    CHECK(std::abs(bi.midpoint() - 1.5) < 1e-9);
  }
  SUBCASE("tribonacci") {
    BetaInterval bi = beta_from_digits(make_preset("tribonacci").digits, tol);
    CHECK(std::abs(bi.midpoint() - 1.839286755214161) < 1e-9);
  }
}

TEST_CASE("digit sequences admitting only an integer base are rejected") {
  DigitSeq d;
  d.digits = {1};
  d.alphabet = 2;
  d.periodicity = Periodicity{0, 1};  // 1 1 1 ... sums to 1/(x-1): root x = 2
  check_structure(d);
  CHECK_THROWS_AS(beta_from_digits(d, Rational(1, 1000000)), NoRoot);
}

TEST_CASE("digit files round-trip including certificates") {
  DigitSeq d = make_preset("witness", 300).digits;
  std::stringstream buf;
  write_digit_file(buf, d);
  DigitSeq back = read_digit_file(buf);
  CHECK(back.digits == d.digits);
  CHECK(back.alphabet == d.alphabet);
  REQUIRE(back.schedule.has_value());
  CHECK(back.schedule->first_run == d.schedule->first_run);
  CHECK(back.schedule->growth == d.schedule->growth);

  DigitSeq g = make_preset("golden").digits;
  std::stringstream buf2;
  write_digit_file(buf2, g);
  DigitSeq gback = read_digit_file(buf2);
  REQUIRE(gback.periodicity.has_value());
  CHECK(gback.periodicity->preperiod == 0);
  CHECK(gback.periodicity->period == 2);
}

TEST_CASE("malformed digit files are rejected") {
  auto parse = [](const std::string& text) {
    std::stringstream buf(text);
    return read_digit_file(buf);
  };
  CHECK_THROWS_AS(parse("1 0 1"), InvalidInput);              // no alphabet line
  CHECK_THROWS_AS(parse("alphabet=2\n1 0 2"), InvalidInput);  // digit out of range
  CHECK_THROWS_AS(parse("alphabet=2\n0 1"), InvalidInput);    // first digit must be b-1
  CHECK_THROWS_AS(parse("alphabet=2\n1 0 x"), InvalidInput);  // bad token
  CHECK_THROWS_AS(parse("alphabet=2\n1 0\nperiod=0"), InvalidInput);  // malformed period
}

TEST_CASE("structure checks verify certificates against the stored digits") {
  DigitSeq d;
  d.digits = {1, 0, 1, 0};
  d.alphabet = 2;
  d.periodicity = Periodicity{0, 3};  // wrong: window (1,0,1) does not repeat
  CHECK_THROWS_AS(check_structure(d), InvalidInput);

  d.periodicity = Periodicity{0, 2};
  CHECK_NOTHROW(check_structure(d));
}

TEST_CASE("presets are well-formed") {
  for (const std::string& name : preset_names()) {
    Preset p = make_preset(name);
    CHECK(p.name == name);
    CHECK(validate_admissible(p.digits).admissible);
  }
  CHECK(make_preset("witness").digits.depth() >= 300);
  CHECK(make_preset("three-halves", 40).digits.depth() == 40);
  CHECK_THROWS_AS(make_preset("nope"), InvalidInput);
}

TEST_CASE("display base estimate agrees with the certified interval") {
  CHECK(beta_estimate(make_preset("golden").digits) ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));
  CHECK(beta_estimate(make_preset("witness").digits) ==
        doctest::Approx(1.4163758891984444).epsilon(1e-9));
}

TEST_CASE("precision cap honors the environment variable") {
  const char* old = std::getenv("BETATHERMO_PRECISION");
  std::string saved = old ? old : "";
  setenv("BETATHERMO_PRECISION", "512", 1);
  CHECK(default_precision_cap() == 512);
  if (old)
    setenv("BETATHERMO_PRECISION", saved.c_str(), 1);
  else
    unsetenv("BETATHERMO_PRECISION");
  CHECK(default_precision_cap() >= 16);
}
