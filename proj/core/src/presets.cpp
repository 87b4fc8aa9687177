#include "betathermo/presets.hpp"

#include <algorithm>

#include "betathermo/certified.hpp"
#include "betathermo/errors.hpp"

namespace betathermo {

Preset make_preset(const std::string& name, int depth) {
  if (depth < 4) throw InvalidInput("preset depth must be >= 4");
  Preset p;
  p.name = name;
  if (name == "golden") {
    p.beta_text = "(1+sqrt 5)/2";
    p.digits = expand_one(parse_beta(p.beta_text), depth, default_precision_cap());
  } else if (name == "three-halves") {
    p.beta_text = "3/2";
    p.digits = expand_one(parse_beta(p.beta_text), depth, default_precision_cap());
  } else if (name == "tribonacci") {
    p.beta_text = "real root of x^3 = x^2 + x + 1 (approximately 1.8392867552)";
    p.digits.alphabet = 2;
    p.digits.digits = {1, 1, 0};
    p.digits.periodicity = Periodicity{0, 3};
    p.digits.source = DigitSource::Supplied;
    check_structure(p.digits);
  } else if (name == "witness") {
    p.beta_text = "root of the scheduled digit series (approximately 1.41638)";
    int want = std::max(depth, 300);
    p.digits.alphabet = 2;
    p.digits.schedule = ZeroRunSchedule{2, 2};
    long run = 2;
    while (p.digits.depth() < want) {
      p.digits.digits.push_back(1);
      for (long z = 0; z < run && p.digits.depth() < want; ++z) p.digits.digits.push_back(0);
      run *= 2;
    }
    p.digits.source = DigitSource::Supplied;
    check_structure(p.digits);
  } else {
    throw InvalidInput("unknown preset '" + name +
                       "' (expected golden, three-halves, tribonacci, or witness)");
  }
  return p;
}

std::vector<std::string> preset_names() {
  return {"golden", "three-halves", "tribonacci", "witness"};
}

}  // namespace betathermo
