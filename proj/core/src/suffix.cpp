#include "betathermo/suffix.hpp"

#include <algorithm>

#include "betathermo/errors.hpp"

namespace betathermo {

ZeroRun zero_run_after(const DigitSeq& d, long prefix_len) {
  if (prefix_len < 0) throw InvalidInput("prefix length must be >= 0");
  ZeroRun run;
  long i = prefix_len + 1;
  while (true) {
    if (!d.unbounded() && i > d.depth()) {
      run.resolved = false;
      return run;
    }
    if (d.digit(i) != 0) return run;
    ++run.length;
    ++i;
  }
}

SuffixInfo suffix_info(const DigitSeq& d, const PrefixAutomaton& a, const Word& w) {
  auto cur = a.run(w);
  if (!cur) throw NotInLanguage("word " + w.str() + " is not admissible");
  SuffixInfo info;
  info.q = cur->suffix_len;
  info.zero_run = zero_run_after(d, cur->suffix_len);
  const long n = static_cast<long>(w.size());
  info.v.letters.assign(w.letters.begin(), w.letters.begin() + (n - info.q));
  for (long i = 1; i <= info.q; ++i) info.s.letters.push_back(d.digit(i));
  info.hat = w;
  if (info.q > 0) {
    long k = info.q;
    while (d.digit(k) == 0) --k;  // digit 1 is nonzero, so k >= 1
    info.hat.letters[static_cast<std::size_t>(n - info.q + k - 1)] = d.digit(k) - 1;
  }
  return info;
}

Word hat_word(const DigitSeq& d, const PrefixAutomaton& a, const Word& w) {
  return suffix_info(d, a, w).hat;
}

long zbar(const DigitSeq& d, long n) {
  if (n < 0) throw InvalidInput("scan length must be >= 0");
  long best = 0;
  long m = 0;
  // Runs started by prefixes inside an earlier run are sub-runs of it, so
  // jumping from one run end to the next nonzero digit loses nothing.
  while (m <= n) {
    ZeroRun r = zero_run_after(d, m);
    if (!r.resolved)
      throw DepthExceeded("zero run after prefix length " + std::to_string(m) +
                          " is still open at the stored digit depth");
    best = std::max(best, r.length);
    m += r.length + 1;
  }
  return best;
}

std::vector<ZbarCheckpoint> run_checkpoints(const DigitSeq& d, long max_position) {
  std::vector<ZbarCheckpoint> out;
  long scan = max_position;
  if (!d.unbounded()) scan = std::min(scan, static_cast<long>(d.depth()) - 1);
  for (long m = 1; m <= scan; ++m) {
    if (d.digit(m) == 0 || d.digit(m + 1) != 0) continue;
    ZeroRun r = zero_run_after(d, m);
    if (!r.resolved) break;
    out.push_back({m, r.length, static_cast<double>(r.length) / static_cast<double>(m)});
  }
  return out;
}

ZbarVerdict structure_verdict(const DigitSeq& d) {
  if (d.periodicity) return ZbarVerdict::CertifiedSublinear;
  if (d.schedule) return ZbarVerdict::PositiveLimsupEvidence;
  return ZbarVerdict::Inconclusive;
}

double schedule_limit_ratio(const DigitSeq& d) {
  long scan = d.periodicity ? d.periodicity->preperiod + d.periodicity->period
                            : d.depth() - 1;
  auto cps = run_checkpoints(d, scan);
  double ratio = 0.0;
  bool have = false;
  for (const auto& cp : cps) {
    ratio = have ? std::min(ratio, cp.ratio) : cp.ratio;
    have = true;
  }
  return ratio;
}

ZbarProfile zbar_profile(const DigitSeq& d, long N) {
  check_structure(d);
  ZbarProfile prof;
  long best = 0;
  for (long n = 1; n <= N; ++n) {
    ZeroRun r = zero_run_after(d, n);
    if (!r.resolved)
      throw DepthExceeded("zero run after prefix length " + std::to_string(n) +
                          " is still open at the stored digit depth");
    best = std::max(best, r.length);
    prof.values.push_back(best);
    prof.ratios.push_back(static_cast<double>(best) / static_cast<double>(n));
  }
  prof.checkpoints = run_checkpoints(d, N);
  prof.verdict = structure_verdict(d);
  if (prof.verdict == ZbarVerdict::PositiveLimsupEvidence)
    prof.limit_ratio = schedule_limit_ratio(d);
  return prof;
}

}  // namespace betathermo
