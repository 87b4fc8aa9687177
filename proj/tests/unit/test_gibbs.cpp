#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "betathermo/automaton.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/errors.hpp"
#include "betathermo/gibbs.hpp"
#include "betathermo/partition.hpp"
#include "betathermo/potential.hpp"
#include "betathermo/presets.hpp"
#include "betathermo/word.hpp"
#include "oracles.hpp"

using namespace betathermo;
namespace bt_test = betathermo::testing;

TEST_CASE("stationary oracle reproduces the closed-form golden measure") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("golden").digits);
  MarkovOracle oracle(a);
  CHECK(oracle.entropy() == doctest::Approx(std::log(bt_test::golden_ratio())).epsilon(1e-12));
  CHECK(oracle.measure(Word{1}) == doctest::Approx(bt_test::golden_mass_one()).epsilon(1e-11));
  CHECK(oracle.measure(Word{0}) == doctest::Approx(bt_test::golden_mass_zero()).epsilon(1e-11));
  CHECK(oracle.measure(Word{1, 1}) == 0.0);
  CHECK(oracle.measure(Word{}) == doctest::Approx(1.0).epsilon(1e-12));

  // a probability measure: masses of the words of each length sum to one
  for (int m = 1; m <= 6; ++m) {
    double total = 0.0;
    a.for_each_word(m, [&](const Word& w, const PrefixAutomaton::Cursor&) {
      total += oracle.measure(w);
    });
    CHECK(total == doctest::Approx(1.0).epsilon(1e-11));
  }

  // shift invariance on cylinders: nu([u]) = sum_a nu([a u])
  a.for_each_word(3, [&](const Word& u, const PrefixAutomaton::Cursor&) {
    double extended = 0.0;
    for (int letter = 0; letter < 2; ++letter) {
      Word au{letter};
      extended += oracle.measure(au.concat(u));
    }
    CHECK(extended == doctest::Approx(oracle.measure(u)).epsilon(1e-10));
  });
}

TEST_CASE("stationary oracle entropy for the tribonacci base") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("tribonacci").digits);
  MarkovOracle oracle(a);
  CHECK(std::exp(oracle.entropy()) == doctest::Approx(1.839286755214161).epsilon(1e-12));
}

TEST_CASE("stationary oracle refuses truncated sequences") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("witness").digits);
  CHECK_THROWS_AS(MarkovOracle{a}, NotEventuallyPeriodic);
}

TEST_CASE("finite-volume cylinder estimates approach the exact measure") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("golden").digits);
  MarkovOracle oracle(a);
  Potential zero = Potential::zero(2);
  const int n = 15;
  for (int m = 1; m <= 4; ++m) {
    a.for_each_word(m, [&](const Word& u, const PrefixAutomaton::Cursor&) {
      CAPTURE(u.str());
      double est = cylinder_estimate(a, zero, n, u);
      CHECK(std::abs(est - oracle.measure(u)) < 0.01);
    });
  }
}

TEST_CASE("cylinder estimates reject non-members and oversized words") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("golden").digits);
  Potential zero = Potential::zero(2);
  CHECK_THROWS_AS(cylinder_estimate(a, zero, 8, Word{1, 1}), NotInLanguage);
  CHECK_THROWS_AS(cylinder_estimate(a, zero, 2, Word{1, 0, 1, 0, 1, 0}), WindowTooSmall);
  CHECK_THROWS_AS(cylinder_distribution(a, zero, 1, 4), WindowTooSmall);
}

TEST_CASE("cylinder distributions are exact probability vectors") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("golden").digits);
  for (const Potential& phi : {Potential::zero(2), Potential::indicator(2, 1, 0.6)}) {
    for (int n : {4, 8}) {
      for (int m = 1; m <= 3; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        std::map<Word, double> dist = cylinder_distribution(a, phi, n, m);
        CHECK(dist.size() == static_cast<std::size_t>(bt_test::fibonacci(m + 2)));
        double total = 0.0;
        for (auto& [w, p] : dist) {
          CHECK(p >= 0.0);
          total += p;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("exact defect profile for the golden base follows the closed form") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("golden").digits);
  Potential zero = Potential::zero(2);
  DefectReport rep = weak_gibbs_defect(a, zero, DefectMode::Oracle, 15, 0,
                                       std::numeric_limits<double>::quiet_NaN());
  REQUIRE(rep.points.size() == 15);
  const double ln_s5 = 0.5 * std::log(5.0);
  const double ln_phi = std::log(bt_test::golden_ratio());
  // smallest-mass words pay a sqrt(5) prefactor: D_1 = ln sqrt 5,
  // D_2 = (ln sqrt 5 - ln phi)/2, and D_m = (ln sqrt 5)/m afterwards
  CHECK(rep.points[0].defect == doctest::Approx(ln_s5).epsilon(1e-9));
  CHECK(rep.points[1].defect == doctest::Approx((ln_s5 - ln_phi) / 2.0).epsilon(1e-9));
  for (int m = 3; m <= 15; ++m)
    CHECK(rep.points[static_cast<std::size_t>(m - 1)].defect ==
          doctest::Approx(ln_s5 / m).epsilon(1e-9));
  // decays past the initial dip: monotone from m = 4 on, small by m = 15
  for (std::size_t i = 3; i + 1 < rep.points.size(); ++i)
    CHECK(rep.points[i + 1].defect <= rep.points[i].defect + 1e-12);
  CHECK(rep.points.back().defect < 0.15);
  CHECK(rep.p_hat == doctest::Approx(ln_phi).epsilon(1e-12));
}

TEST_CASE("oracle defect mode rejects non-flat potentials") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("golden").digits);
  CHECK_THROWS_AS(weak_gibbs_defect(a, Potential::indicator(2, 1, 1.0), DefectMode::Oracle, 3, 0,
                                    std::numeric_limits<double>::quiet_NaN()),
                  InvalidInput);
}

TEST_CASE("estimator defect profile stays close to the exact one") {
  PrefixAutomaton a = PrefixAutomaton::build(make_preset("golden").digits);
  Potential zero = Potential::zero(2);
  DefectReport exact = weak_gibbs_defect(a, zero, DefectMode::Oracle, 4, 0,
                                         std::numeric_limits<double>::quiet_NaN());
  DefectReport est = weak_gibbs_defect(a, zero, DefectMode::Estimator, 4, 15,
                                       std::log(bt_test::golden_ratio()));
  REQUIRE(est.points.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(est.points[i].defect == doctest::Approx(exact.points[i].defect).epsilon(0.05));
}

TEST_CASE("scheduled sequences show defects that refuse to decay") {
  DigitSeq d = make_preset("witness").digits;
  PrefixAutomaton a = PrefixAutomaton::build(d);
  Potential zero = Potential::zero(d.alphabet);
  const int n = 12;
  DefectReport rep = weak_gibbs_defect(a, zero, DefectMode::Estimator, 9, n,
                                       std::numeric_limits<double>::quiet_NaN());
  REQUIRE(rep.points.size() == 9);
  CHECK(rep.p_hat > 0.2);
  // at the run-start lengths 1, 4, 9 the forced-zero block keeps D_m bounded
  // away from zero on the scale of the pressure itself
  for (int m : {1, 4, 9})
    CHECK(rep.points[static_cast<std::size_t>(m - 1)].defect > 0.1 * rep.p_hat);
}

TEST_CASE("witness words head the forced-zero blocks") {
  DigitSeq d = make_preset("witness").digits;
  std::vector<Witness> ws = make_witnesses(d, 140);
  REQUIRE(ws.size() == 7);
  const long expect_pos[] = {1, 4, 9, 18, 35, 68, 133};
  const long expect_run[] = {2, 4, 8, 16, 32, 64, 128};
  for (std::size_t i = 0; i < ws.size(); ++i) {
    CAPTURE(i);
    CHECK(static_cast<long>(ws[i].w.size()) == expect_pos[i]);
    CHECK(ws[i].zero_run == expect_run[i]);
    CHECK(ws[i].padded.size() == ws[i].w.size() + static_cast<std::size_t>(expect_run[i]));
    CHECK(ws[i].ratio ==
          doctest::Approx(static_cast<double>(expect_run[i]) / expect_pos[i]).epsilon(1e-12));
    // the padded word ends with the forced zeros
    for (std::size_t j = ws[i].w.size(); j < ws[i].padded.size(); ++j)
      CHECK(ws[i].padded[j] == 0);
  }
}

TEST_CASE("witness words for the golden base are the odd digit prefixes") {
  DigitSeq d = make_preset("golden").digits;
  std::vector<Witness> ws = make_witnesses(d, 8);
  REQUIRE(ws.size() == 4);  // lengths 1, 3, 5, 7; every zero run has length 1
  for (std::size_t i = 0; i < ws.size(); ++i) {
    CHECK(ws[i].w.size() == 2 * i + 1);
    CHECK(ws[i].zero_run == 1);
  }
}

TEST_CASE("padded witness words pin exactly the same configurations") {
  for (const char* name : {"golden", "witness"}) {
    CAPTURE(name);
    DigitSeq d = make_preset(name).digits;
    PrefixAutomaton a = PrefixAutomaton::build(d);
    Potential phi = Potential::indicator(d.alphabet, 1, 0.4);
    Witness first = make_witnesses(d, 3).front();
    PaddingIdentityReport rep =
        padding_identity_check(d, a, phi, 8, first.w);
    CHECK(rep.padded == first.padded);
    CHECK(!rep.ratios.empty());
    CHECK(rep.max_deviation < 1e-6);
  }
}

TEST_CASE("envelope bounds contain every small-word estimate") {
  for (const char* name : {"golden", "three-halves"}) {
    CAPTURE(name);
    DigitSeq d = make_preset(name, 40).digits;
    PrefixAutomaton a = PrefixAutomaton::build(d);
    for (const Potential& phi :
         {Potential::zero(d.alphabet), Potential::indicator(d.alphabet, 1, 0.5)}) {
      EnvelopeReport rep = envelope_check(d, a, phi, 12, 5, 0.05,
                                          std::numeric_limits<double>::quiet_NaN());
      CHECK(rep.all_contained);
      CHECK(rep.min_lower_margin >= 1.0);
      CHECK(rep.min_upper_margin >= 1.0);
      for (const EnvelopeRow& row : rep.rows) {
        CAPTURE(row.u.str());
        CHECK(row.contained);
        CHECK(row.lower <= row.estimate);
        CHECK(row.estimate <= row.upper);
      }
    }
  }
}

TEST_CASE("classification separates the preset families") {
  Potential zero2 = Potential::zero(2);

  DigitSeq golden = make_preset("golden").digits;
  Classification g =
      classify(golden, PrefixAutomaton::build(golden), zero2, 12, 0.05);
  CHECK(g.verdict == GibbsClass::WeakGibbs);
  CHECK(g.structure == ZbarVerdict::CertifiedSublinear);

  DigitSeq wit = make_preset("witness").digits;
  Classification w = classify(wit, PrefixAutomaton::build(wit), zero2, 12, 0.05);
  CHECK(w.verdict == GibbsClass::NotWeakGibbsEvidence);
  CHECK(w.structure == ZbarVerdict::PositiveLimsupEvidence);
  CHECK(w.gap > 0.0);

  // an enormous tolerance eats the pressure gap: evidence degrades
  Classification w_loose = classify(wit, PrefixAutomaton::build(wit), zero2, 12, 10.0);
  CHECK(w_loose.verdict == GibbsClass::Inconclusive);

  DigitSeq th = make_preset("three-halves", 40).digits;
  Classification t = classify(th, PrefixAutomaton::build(th), zero2, 10, 0.05);
  CHECK(t.verdict == GibbsClass::Inconclusive);
  CHECK(t.structure == ZbarVerdict::Inconclusive);
}

TEST_CASE("pinned ratios are invariant under shifting the pinned word") {
  // moving the same word to different offsets inside a large window changes
  // the conditional mass only at the level of the far-boundary corrections
  DigitSeq d = make_preset("golden").digits;
  PrefixAutomaton a = PrefixAutomaton::build(d);
  Potential zero = Potential::zero(2);
  const int n = 30;
  double log_full = log_partition(a, zero, n);
  std::vector<double> ratios;
  for (long k = -2; k <= 2; ++k)
    ratios.push_back(std::exp(log_partition_pinned(a, zero, n, PinnedWindow{k, Word{1}}) - log_full));
  for (double r : ratios) CHECK(std::abs(r - ratios[0]) < 1e-9);
}
