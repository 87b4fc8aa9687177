#pragma once

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "betathermo/digits.hpp"
#include "betathermo/gibbs.hpp"
#include "betathermo/partition.hpp"
#include "betathermo/pressure.hpp"
#include "betathermo/suffix.hpp"
#include "betathermo/word.hpp"

namespace betathermo {

// Rounds to 12 significant digits so serialized reports are stable across
// runs and don't leak last-bit noise into diffs.
double stable_num(double v);

const char* to_string(ZbarVerdict v);
const char* to_string(GibbsClass c);
const char* to_string(DefectMode m);

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const DigitSeq& d);
nlohmann::json to_json(const AdmissibilityReport& r);
nlohmann::json to_json(const BetaInterval& r);
nlohmann::json to_json(const SuffixInfo& r);
nlohmann::json to_json(const ZbarProfile& r);
nlohmann::json to_json(const PressureEstimate& r);
nlohmann::json to_json(const DefectReport& r);
nlohmann::json to_json(const EnvelopeReport& r);
nlohmann::json to_json(const PaddingIdentityReport& r);
nlohmann::json to_json(const Classification& r);
nlohmann::json to_json(const PinnedBoundsReport& r);
nlohmann::json to_json(const std::vector<Witness>& witnesses);
nlohmann::json to_json(const std::map<Word, double>& distribution);

}  // namespace betathermo
