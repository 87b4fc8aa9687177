#pragma once

#include <map>
#include <string>
#include <vector>

#include "betathermo/automaton.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/potential.hpp"
#include "betathermo/suffix.hpp"
#include "betathermo/word.hpp"

namespace betathermo {

// Finite-volume estimate of the invariant mass of the cylinder fixing the
// word u: the pinned-to-full ratio of configuration sums, averaged over
// every placement of u inside [-n, n]. Throws NotInLanguage for words
// outside the language.
double cylinder_estimate(const PrefixAutomaton& a, const Potential& phi, int n, const Word& u);

// cylinder_estimate for every admissible word of the given length, sharing
// one denominator. The values sum to 1 up to floating-point error because
// the pinned sums at each placement partition the full sum.
std::map<Word, double> cylinder_distribution(const PrefixAutomaton& a, const Potential& phi,
                                             int n, int length);

// Exact stationary measure of maximal entropy on the folded word graph:
// Perron eigendata of the letter-count transition matrix. Requires a
// complete (certified periodic) automaton.
class MarkovOracle {
 public:
  explicit MarkovOracle(const PrefixAutomaton& a);

  double entropy() const { return entropy_; }  // log of the Perron eigenvalue

  // Stationary mass of the cylinder fixing w (0 for non-members):
  // sum over start states of left[s] * right[end(s,w)] / lambda^{|w|}.
  double measure(const Word& w) const;

 private:
  PrefixAutomaton aut_;
  double lambda_ = 0.0;
  double entropy_ = 0.0;
  std::vector<double> left_, right_;
};

// |(1/m) log nu(u) - (1/m) (energy(u) - m p_hat)|: how far the cylinder
// mass is from the exponential predicted by the normalized potential.
double cylinder_defect_from_measure(double measure, const Potential& phi, const Word& u,
                                    double p_hat);

enum class DefectMode {
  Estimator,  // cylinder masses from finite-volume estimates at window n
  Oracle,     // exact masses from MarkovOracle (zero potential only)
};

struct DefectPoint {
  int m = 0;
  double defect = 0.0;  // max over admissible words of length m
  Word argmax;
  // Potential-window mass that leaks outside the word's positions; widens
  // the defect into a band for multi-site potentials (zero for single-site).
  double boundary_correction = 0.0;
};

struct DefectReport {
  DefectMode mode = DefectMode::Estimator;
  int n = 0;  // estimator window (0 in oracle mode)
  double p_hat = 0.0;
  std::vector<DefectPoint> points;  // m = 1..m_max
};

// Defect profile D_m for m = 1..m_max. In estimator mode p_hat may be
// supplied (NaN means: estimate it from the pressure modes at window n).
// Oracle mode requires the zero potential and a complete automaton, and
// uses the oracle's own entropy as p_hat.
DefectReport weak_gibbs_defect(const PrefixAutomaton& a, const Potential& phi, DefectMode mode,
                               int m_max, int n, double p_hat_in);

// Prefixes of the digit sequence at which a zero run starts (last letter
// nonzero, next digit zero), up to max_len. These words head the long
// forced-zero blocks and witness large defects for scheduled sequences.
// padded = w followed by its forced zeros; both are verified members.
struct Witness {
  Word w;
  Word padded;
  long zero_run = 0;
  double ratio = 0.0;  // zero_run / |w|
};

std::vector<Witness> make_witnesses(const DigitSeq& d, int max_len);

// Two-sided envelope for cylinder estimates: explicit constants times
// exp(energy(u) - m p_hat) must bracket the estimate for every admissible
// word of length m <= m_max.
struct EnvelopeRow {
  Word u;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  long zero_run = 0;  // zero run after the word's matched suffix
  bool contained = false;
};

struct EnvelopeReport {
  int n = 0;
  int m_max = 0;
  double eps = 0.0;
  double p_hat = 0.0;
  std::vector<EnvelopeRow> rows;
  bool all_contained = false;
  double min_lower_margin = 0.0;  // smallest estimate/lower ratio seen
  double min_upper_margin = 0.0;  // smallest upper/estimate ratio seen
};

EnvelopeReport envelope_check(const DigitSeq& d, const PrefixAutomaton& a, const Potential& phi,
                              int n, int m_max, double eps, double p_hat_in);

// A word and its zero-extension w~ = w 0^z fix the same configurations, so
// the pinned sums at every common placement agree exactly; this report
// records the per-placement ratios as a consistency check.
struct PaddingIdentityReport {
  Word w;
  Word padded;
  std::vector<double> ratios;  // one per placement where both words fit
  double max_deviation = 0.0;  // max |ratio - 1|
};

PaddingIdentityReport padding_identity_check(const DigitSeq& d, const PrefixAutomaton& a,
                                             const Potential& phi, int n, const Word& w);

enum class GibbsClass { WeakGibbs, NotWeakGibbsEvidence, Inconclusive };

struct Classification {
  GibbsClass verdict = GibbsClass::Inconclusive;
  ZbarVerdict structure = ZbarVerdict::Inconclusive;
  double p_hat = 0.0;
  // p_hat - phi(all-zero configuration) - 6 eps: must be positive for the
  // negative verdict, since the defect at scheduled words grows like this
  // gap times the zero-run density.
  double gap = 0.0;
  std::string reason;
};

// Combines the zero-run structure of the digit sequence with the pressure
// gap test: certified bounded runs give WeakGibbs; a verified growing
// schedule with a positive gap gives NotWeakGibbsEvidence; anything else is
// Inconclusive.
Classification classify(const DigitSeq& d, const PrefixAutomaton& a, const Potential& phi, int n,
                        double eps);

}  // namespace betathermo
