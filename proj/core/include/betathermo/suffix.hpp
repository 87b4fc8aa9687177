#pragma once

#include <vector>

#include "betathermo/automaton.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/word.hpp"

namespace betathermo {

// Length of the zero run in the digit sequence immediately after a prefix:
// the largest k with digits prefix_len+1 .. prefix_len+k all zero. resolved
// is false when the run is still open at the stored depth of an uncertified
// sequence, in which case length is the observed lower bound.
struct ZeroRun {
  long length = 0;
  bool resolved = true;
};

ZeroRun zero_run_after(const DigitSeq& d, long prefix_len);

// Decomposition of a member word w = v . s where s is the longest suffix of
// w that is a prefix of the digit sequence. q = |s| is also the automaton
// end state in the unfolded picture. zero_run is the forced-zero count
// after s, and hat is w with the last nonzero letter of s decremented (a
// member word with empty matched suffix, freely concatenable).
struct SuffixInfo {
  Word s;
  Word v;
  Word hat;
  long q = 0;
  ZeroRun zero_run;
};

// Throws NotInLanguage when the word is rejected.
SuffixInfo suffix_info(const DigitSeq& d, const PrefixAutomaton& a, const Word& w);

// Just the hat rewrite (identity for words with empty matched suffix).
Word hat_word(const DigitSeq& d, const PrefixAutomaton& a, const Word& w);

// Largest zero run started by any prefix of length <= n. Throws
// DepthExceeded when some run within range is still open at the stored
// depth of an uncertified sequence.
long zbar(const DigitSeq& d, long n);

// Positions m where a zero run starts (digit m nonzero, digit m+1 zero),
// with the resolved run length and the ratio length/m. The scan stops at
// max_position or at the first unresolved run.
struct ZbarCheckpoint {
  long position = 0;
  long zero_run = 0;
  double ratio = 0.0;
};

std::vector<ZbarCheckpoint> run_checkpoints(const DigitSeq& d, long max_position);

// CertifiedSublinear: a periodicity certificate bounds every zero run, so
// zbar(n)/n -> 0. PositiveLimsupEvidence: a verified zero-run schedule
// with geometric growth keeps run/position ratios bounded away from zero.
// Inconclusive: finite digits with neither certificate.
enum class ZbarVerdict { CertifiedSublinear, PositiveLimsupEvidence, Inconclusive };

ZbarVerdict structure_verdict(const DigitSeq& d);

// Smallest ratio among resolved run checkpoints (searched through the
// stored depth); 0 when there are none. For scheduled sequences this is
// the certified floor for the eventual run/position ratio.
double schedule_limit_ratio(const DigitSeq& d);

struct ZbarProfile {
  std::vector<long> values;    // zbar(n) for n = 1..N
  std::vector<double> ratios;  // zbar(n)/n
  std::vector<ZbarCheckpoint> checkpoints;  // run starts with position <= N
  ZbarVerdict verdict = ZbarVerdict::Inconclusive;
  double limit_ratio = 0.0;
};

ZbarProfile zbar_profile(const DigitSeq& d, long N);

}  // namespace betathermo
