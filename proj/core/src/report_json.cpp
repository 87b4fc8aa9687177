#include "betathermo/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "betathermo/numeric.hpp"

namespace betathermo {

double stable_num(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

const char* to_string(ZbarVerdict v) {
  switch (v) {
    case ZbarVerdict::CertifiedSublinear: return "certified-sublinear";
    case ZbarVerdict::PositiveLimsupEvidence: return "positive-limsup-evidence";
    case ZbarVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(GibbsClass c) {
  switch (c) {
    case GibbsClass::WeakGibbs: return "weak-gibbs";
    case GibbsClass::NotWeakGibbsEvidence: return "not-weak-gibbs-evidence";
    case GibbsClass::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(DefectMode m) {
  switch (m) {
    case DefectMode::Estimator: return "estimator";
    case DefectMode::Oracle: return "oracle";
  }
  return "estimator";
}

nlohmann::json to_json(const Word& w) { return w.str(); }

nlohmann::json to_json(const DigitSeq& d) {
  nlohmann::json j{{"alphabet", d.alphabet},
                   {"depth", d.depth()},
                   {"digits", d.digits},
                   {"source", d.source == DigitSource::Computed ? "computed" : "supplied"}};
  if (d.periodicity)
    j["periodicity"] = {{"preperiod", d.periodicity->preperiod},
                        {"period", d.periodicity->period}};
  else
    j["periodicity"] = nullptr;
  if (d.schedule)
    j["schedule"] = {{"first_run", d.schedule->first_run}, {"growth", d.schedule->growth}};
  else
    j["schedule"] = nullptr;
  return j;
}

nlohmann::json to_json(const AdmissibilityReport& r) {
  nlohmann::json j{{"admissible", r.admissible}, {"zero_tail_warning", r.zero_tail_warning}};
  if (!r.admissible) {
    j["shift"] = r.shift;
    j["position"] = r.position;
  }
  return j;
}

nlohmann::json to_json(const BetaInterval& r) {
  return {{"lo", rational_str(r.lo)},
          {"hi", rational_str(r.hi)},
          {"midpoint", stable_num(to_double(r.midpoint()))},
          {"width", stable_num(to_double(r.width()))}};
}

nlohmann::json to_json(const SuffixInfo& r) {
  return {{"s", r.s.str()},
          {"v", r.v.str()},
          {"hat", r.hat.str()},
          {"q", r.q},
          {"z", r.zero_run.length},
          {"z_resolved", r.zero_run.resolved}};
}

nlohmann::json to_json(const ZbarProfile& r) {
  nlohmann::json cps = nlohmann::json::array();
  for (const auto& cp : r.checkpoints)
    cps.push_back({{"position", cp.position},
                   {"zero_run", cp.zero_run},
                   {"ratio", stable_num(cp.ratio)}});
  nlohmann::json vals = nlohmann::json::array(), ratios = nlohmann::json::array();
  for (long v : r.values) vals.push_back(v);
  for (double v : r.ratios) ratios.push_back(stable_num(v));
  return {{"values", vals},
          {"ratios", ratios},
          {"checkpoints", cps},
          {"verdict", to_string(r.verdict)},
          {"limit_ratio", stable_num(r.limit_ratio)}};
}

nlohmann::json to_json(const PressureEstimate& r) {
  nlohmann::json full = nlohmann::json::array(), free = nlohmann::json::array();
  for (double v : r.full) full.push_back(stable_num(v));
  for (double v : r.free_words) free.push_back(stable_num(v));
  return {{"full", full},
          {"free_words", free},
          {"full_accel", stable_num(r.full_accel)},
          {"free_accel", stable_num(r.free_accel)},
          {"value", stable_num(r.value)},
          {"spread", stable_num(r.spread)}};
}

nlohmann::json to_json(const DefectReport& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : r.points)
    pts.push_back({{"m", p.m},
                   {"defect", stable_num(p.defect)},
                   {"argmax", p.argmax.str()},
                   {"boundary_correction", stable_num(p.boundary_correction)}});
  return {{"mode", to_string(r.mode)},
          {"n", r.n},
          {"p_hat", stable_num(r.p_hat)},
          {"points", pts}};
}

nlohmann::json to_json(const EnvelopeReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"word", row.u.str()},
                    {"estimate", stable_num(row.estimate)},
                    {"lower", stable_num(row.lower)},
                    {"upper", stable_num(row.upper)},
                    {"zero_run", row.zero_run},
                    {"contained", row.contained}});
  return {{"n", r.n},
          {"m_max", r.m_max},
          {"eps", stable_num(r.eps)},
          {"p_hat", stable_num(r.p_hat)},
          {"all_contained", r.all_contained},
          {"min_lower_margin", stable_num(r.min_lower_margin)},
          {"min_upper_margin", stable_num(r.min_upper_margin)},
          {"rows", rows}};
}

nlohmann::json to_json(const PaddingIdentityReport& r) {
  nlohmann::json ratios = nlohmann::json::array();
  for (double v : r.ratios) ratios.push_back(stable_num(v));
  return {{"word", r.w.str()},
          {"padded", r.padded.str()},
          {"ratios", ratios},
          {"max_deviation", stable_num(r.max_deviation)}};
}

nlohmann::json to_json(const Classification& r) {
  return {{"verdict", to_string(r.verdict)},
          {"structure", to_string(r.structure)},
          {"p_hat", stable_num(r.p_hat)},
          {"gap", stable_num(r.gap)},
          {"reason", r.reason}};
}

nlohmann::json to_json(const PinnedBoundsReport& r) {
  return {{"hat", r.hat.str()},
          {"log_pinned", stable_num(r.log_pinned)},
          {"log_pinned_fresh", stable_num(r.log_pinned_fresh)},
          {"log_pinned_fresh_hat", stable_num(r.log_pinned_fresh_hat)},
          {"upper_constant_log", stable_num(r.upper_constant_log)},
          {"lower_constant_log", stable_num(r.lower_constant_log)},
          {"holds", r.holds}};
}

nlohmann::json to_json(const std::vector<Witness>& witnesses) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : witnesses)
    arr.push_back({{"word", w.w.str()},
                   {"padded", w.padded.str()},
                   {"zero_run", w.zero_run},
                   {"ratio", stable_num(w.ratio)}});
  return arr;
}

nlohmann::json to_json(const std::map<Word, double>& distribution) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, v] : distribution) j[w.str()] = stable_num(v);
  return j;
}

}  // namespace betathermo
