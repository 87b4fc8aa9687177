#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "betathermo/automaton.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/errors.hpp"
#include "betathermo/gibbs.hpp"
#include "betathermo/potential.hpp"
#include "betathermo/presets.hpp"
#include "betathermo/report_json.hpp"
#include "betathermo/word.hpp"

using namespace betathermo;
using nlohmann::json;

TEST_CASE("numeric rounding for reports is idempotent and 12-digit") {
  CHECK(stable_num(1.0 / 3.0) == 0.333333333333);
  CHECK(stable_num(stable_num(1.0 / 3.0)) == stable_num(1.0 / 3.0));
  CHECK(stable_num(0.0) == 0.0);
  CHECK(stable_num(-2.5e-15) == -2.5e-15);
  CHECK(std::isinf(stable_num(-std::numeric_limits<double>::infinity())));
  // two doubles closer than 1 part in 1e12 collapse to the same value
  CHECK(stable_num(0.1 + 0.2) == stable_num(0.3));
}

TEST_CASE("potential round-trips through its serialized form") {
  Potential phi(2, 1, 1);
  phi.set({0, 1, 0}, 0.25);
  phi.set({1, 0, 1}, -1.5);
  phi.set_name("demo");
  json j = phi.to_json();
  CHECK(j["alphabet"] == 2);
  CHECK(j["window"] == json::array({-1, 1}));
  CHECK(j["name"] == "demo");
  CHECK(j["table"].size() == 2);  // zero entries are omitted
  CHECK(j["table"]["0,1,0"] == 0.25);
  CHECK(j["table"]["1,0,1"] == -1.5);

  Potential back = Potential::from_json(j);
  CHECK(back.alphabet() == 2);
  CHECK(back.left() == 1);
  CHECK(back.right() == 1);
  CHECK(back.name() == "demo");
  CHECK(back.value({0, 1, 0}) == 0.25);
  CHECK(back.value({1, 0, 1}) == -1.5);
  CHECK(back.value({0, 0, 0}) == 0.0);
}

TEST_CASE("potential parsing rejects malformed descriptions") {
  CHECK_THROWS_AS(Potential::from_json(json{{"window", {0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(Potential::from_json(json{{"alphabet", 1}}), InvalidInput);
  // an alphabet alone is a valid zero potential over the default window [0,0]
  Potential zero_like = Potential::from_json(json{{"alphabet", 2}});
  CHECK(zero_like.left() == 0);
  CHECK(zero_like.right() == 0);
  CHECK(zero_like.value({1}) == 0.0);
  // window must contain offset 0
  CHECK_THROWS_AS(Potential::from_json(json{{"alphabet", 2}, {"window", {1, 2}}}), InvalidInput);
  CHECK_THROWS_AS(Potential::from_json(json{{"alphabet", 2}, {"window", {-2, -1}}}), InvalidInput);
  // table keys must have the window's width and stay inside the alphabet
  CHECK_THROWS_AS(
      Potential::from_json(json{{"alphabet", 2}, {"window", {0, 0}}, {"table", {{"0,1", 1.0}}}}),
      InvalidInput);
  CHECK_THROWS_AS(
      Potential::from_json(json{{"alphabet", 2}, {"window", {0, 0}}, {"table", {{"7", 1.0}}}}),
      InvalidInput);
  CHECK_THROWS_AS(
      Potential::from_json(json{{"alphabet", 2}, {"window", {0, 0}}, {"table", {{"x", 1.0}}}}),
      InvalidInput);
}

TEST_CASE("oversized potential windows are refused up front") {
  CHECK_THROWS_AS(Potential(2, 6, 7), WindowTooLarge);
  CHECK_NOTHROW(Potential(2, 5, 5));
}

TEST_CASE("oscillation measures the per-coordinate variation") {
  Potential ind = Potential::indicator(2, 1, 1.0);
  CHECK(ind.total_osc() == 1.0);
  CHECK(ind.osc_away_from_center() == 0.0);
  CHECK(ind.sup_norm() == 1.0);

  Potential phi(2, 1, 0);
  phi.set({0, 0}, 0.0);
  phi.set({0, 1}, 0.5);
  phi.set({1, 0}, 0.3);
  phi.set({1, 1}, 0.8);
  // varying the left coordinate changes the value by at most 0.3, the
  // center one by at most 0.5
  CHECK(phi.osc(-1) == doctest::Approx(0.3));
  CHECK(phi.osc(0) == doctest::Approx(0.5));
  CHECK(phi.total_osc() == doctest::Approx(0.8));
  CHECK(phi.osc_away_from_center() == doctest::Approx(0.3));

  OscProfile prof = osc_profile(phi);
  CHECK(prof.deltas.size() == 2);
  CHECK(prof.deltas.at(-1) == doctest::Approx(0.3));
  CHECK(prof.deltas.at(0) == doctest::Approx(0.5));
  CHECK(prof.norm == doctest::Approx(0.8));
  CHECK(prof.sup_norm == doctest::Approx(0.8));
}

TEST_CASE("padded evaluation reads zeros outside the word") {
  Potential phi(2, 1, 1);
  phi.set({0, 1, 0}, 2.0);
  phi.set({1, 0, 0}, 5.0);
  phi.set({0, 0, 1}, 11.0);
  Word w{1};
  // window at pos -1 sees (0,0,1), at 0 sees (0,1,0), at 1 sees (1,0,0)
  CHECK(phi.eval_padded(w, -1) == 11.0);
  CHECK(phi.eval_padded(w, 0) == 2.0);
  CHECK(phi.eval_padded(w, 1) == 5.0);
  CHECK(phi.eval_padded(w, 5) == phi.value({0, 0, 0}));
  CHECK(phi.energy(w) == 2.0);  // only the word's own position counts

  Word u{1, 0, 1};
  double expect = phi.eval_padded(u, 0) + phi.eval_padded(u, 1) + phi.eval_padded(u, 2);
  CHECK(phi.energy(u) == doctest::Approx(expect));
}

TEST_CASE("serialized digit records carry their certificates") {
  DigitSeq golden = make_preset("golden").digits;
  json j = to_json(golden);
  CHECK(j["alphabet"] == 2);
  CHECK(j["periodicity"]["preperiod"] == 0);
  CHECK(j["periodicity"]["period"] == 2);
  CHECK(j["schedule"].is_null());
  CHECK(j["digits"][0] == 1);

  DigitSeq wit = make_preset("witness").digits;
  json jw = to_json(wit);
  CHECK(jw["periodicity"].is_null());
  CHECK(jw["schedule"]["first_run"] == 2);
  CHECK(jw["schedule"]["growth"] == 2);
}

TEST_CASE("serialized report shapes are stable") {
  DigitSeq d = make_preset("golden").digits;
  PrefixAutomaton a = PrefixAutomaton::build(d);
  Potential zero = Potential::zero(2);

  json prof = to_json(zbar_profile(d, 10));
  CHECK(prof["values"].size() == 10);
  CHECK(prof["ratios"].size() == 10);
  CHECK(prof["verdict"] == "certified-sublinear");
  for (auto& cp : prof["checkpoints"]) {
    CHECK(cp.contains("position"));
    CHECK(cp.contains("zero_run"));
    CHECK(cp.contains("ratio"));
  }

  json cls = to_json(classify(d, a, zero, 8, 0.05));
  CHECK(cls["verdict"] == "weak-gibbs");
  CHECK(cls["structure"] == "certified-sublinear");
  CHECK(cls["reason"].is_string());

  json wits = to_json(make_witnesses(d, 5));
  REQUIRE(wits.is_array());
  CHECK(wits.size() == 3);
  CHECK(wits[0]["word"] == "1");
  CHECK(wits[0]["padded"] == "1,0");
  CHECK(wits[0]["zero_run"] == 1);

  json dist = to_json(cylinder_distribution(a, zero, 6, 2));
  CHECK(dist.size() == 3);
  CHECK(dist.contains("0,0"));
  CHECK(dist.contains("0,1"));
  CHECK(dist.contains("1,0"));

  json pin = to_json(pinned_bounds_report(d, a, zero, 6, 0, Word{1}));
  CHECK(pin["hat"] == "0");
  CHECK(pin["holds"] == true);

  // dumped JSON with sorted keys is deterministic across calls
  std::string once = to_json(estimate_pressure(a, zero, 8)).dump();
  std::string twice = to_json(estimate_pressure(a, zero, 8)).dump();
  CHECK(once == twice);
}

TEST_CASE("verdict and mode names render as kebab-case strings") {
  CHECK(std::string(to_string(ZbarVerdict::CertifiedSublinear)) == "certified-sublinear");
  CHECK(std::string(to_string(ZbarVerdict::PositiveLimsupEvidence)) ==
        "positive-limsup-evidence");
  CHECK(std::string(to_string(GibbsClass::WeakGibbs)) == "weak-gibbs");
  CHECK(std::string(to_string(GibbsClass::NotWeakGibbsEvidence)) == "not-weak-gibbs-evidence");
  CHECK(std::string(to_string(DefectMode::Oracle)) == "oracle");
}
