#pragma once

#include <limits>

#include "betathermo/automaton.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/potential.hpp"
#include "betathermo/word.hpp"

namespace betathermo {

// log(e^a + e^b) without overflow; treats -inf as an absent term.
double log_add(double a, double b);

// Streaming log-sum-exp accumulator: tracks the running maximum and a
// compensated sum of rescaled terms, so adding many terms of very different
// magnitude stays accurate.
class LogSumExp {
 public:
  void add(double log_term);
  // log of the accumulated sum; -inf when nothing was added.
  double value() const;
  long count() const { return count_; }

 private:
  double shift_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  double comp_ = 0.0;
  long count_ = 0;
};

// A word pinned to fixed positions inside the configuration window: v sits
// on positions k .. k+|v|-1.
struct PinnedWindow {
  long k = 0;
  Word v;
  long l() const { return k + static_cast<long>(v.size()) - 1; }
};

// log of the configuration sum over all admissible words occupying
// positions -n..n (zero-padded outside), each weighted by
// exp(sum of potential values at shifts -n..n).
double log_partition(const PrefixAutomaton& a, const Potential& phi, int n);

// Same sum restricted to configurations that carry the pinned word. Returns
// -inf when no admissible configuration matches.
double log_partition_pinned(const PrefixAutomaton& a, const Potential& phi, int n,
                            const PinnedWindow& pin);

// Pinned sum further restricted to configurations whose prefix strictly left
// of the pinned window has empty matched suffix, i.e. the pinned word starts
// at a point where any admissible continuation is allowed.
double log_partition_pinned_fresh(const PrefixAutomaton& a, const Potential& phi, int n,
                                  const PinnedWindow& pin);

// log of the sum over admissible words of the given length whose matched
// suffix is empty (words that concatenate freely), weighted by
// exp(sum of potential values across the word's own positions, zero-padded).
double log_free_word_sum(const PrefixAutomaton& a, const Potential& phi, int length);

// Compares the pinned sums for a word v against the sums for its rewritten
// companion hat(v): the fresh-start sum is squeezed between explicit
// constant multiples of the companion's fresh-start sum.
struct PinnedBoundsReport {
  Word hat;
  double log_pinned = 0.0;            // pinned sum for v
  double log_pinned_fresh = 0.0;      // fresh-start pinned sum for v
  double log_pinned_fresh_hat = 0.0;  // fresh-start pinned sum for hat(v)
  double upper_constant_log = 0.0;    // log[(z1+2) e^{2 osc}]
  double lower_constant_log = 0.0;    // log[|A|^-(zv+1) e^{-(zv+2) osc}]
  bool holds = false;
};

PinnedBoundsReport pinned_bounds_report(const DigitSeq& d, const PrefixAutomaton& a,
                                        const Potential& phi, int n, long k, const Word& v);

}  // namespace betathermo
