#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "betathermo/certified.hpp"
#include "betathermo/numeric.hpp"

namespace betathermo {

enum class DigitSource { Computed, Supplied };

// c_{i+period} = c_i for all i > preperiod (1-based digit indices).
struct Periodicity {
  int preperiod = 0;
  int period = 0;
};

// Generative description of a digit tail "1 0^{r} 1 0^{r*g} 1 0^{r*g^2} ...":
// block k consists of a single nonzero digit followed by first_run * growth^k
// zeros. Declares linear growth of the longest-zero-run profile; the digits
// themselves are still validated against it as far as they are stored.
struct ZeroRunSchedule {
  long first_run = 2;
  long growth = 2;
};

// The expansion digits c_1..c_N of 1 in base beta (or a user-supplied
// candidate sequence). digits[0] corresponds to c_1; the alphabet is
// {0, ..., alphabet-1} with alphabet = ceil(beta), so digits[0] == alphabet-1.
struct DigitSeq {
  std::vector<int> digits;
  int alphabet = 0;
  DigitSource source = DigitSource::Supplied;
  std::optional<Periodicity> periodicity;
  std::optional<ZeroRunSchedule> schedule;

  int depth() const { return static_cast<int>(digits.size()); }
  // Digits extend to every index once a periodicity certificate is present.
  bool unbounded() const { return periodicity.has_value(); }

  // 1-based digit access with periodic extension; throws DepthExceeded when i
  // runs past the stored depth of a non-periodic sequence.
  int digit(long i) const;
};

// Enforces structural sanity: nonempty, alphabet >= 2, digits within range,
// digits[0] == alphabet-1, certificate window consistent and not all zero.
// Throws InvalidInput on failure. (Admissibility is a separate, weaker check.)
void check_structure(const DigitSeq& d);

// Default cap on certified-interval working precision, in bits.
// BETATHERMO_PRECISION overrides when set.
unsigned default_precision_cap();

// Quasi-greedy expansion of 1: r_0 = 1, c_{i+1} = ceil(beta*r_i) - 1,
// r_{i+1} = beta*r_i - c_{i+1}. Exact inputs run exactly and detect eventual
// periodicity by residual repetition; interval inputs run in certified dyadic
// interval arithmetic, doubling the working precision on an ambiguous ceiling
// until the cap, then failing with PrecisionExhausted. Integral beta raises
// IntegerBeta.
DigitSeq expand_one(const CertifiedReal& beta, int depth,
                    unsigned precision_cap_bits = default_precision_cap());

struct AdmissibilityReport {
  bool admissible = true;
  // First violating shift k >= 1 and the 1-based position within the shifted
  // word where the comparison fails; -1/-1 when admissible.
  int shift = -1;
  int position = -1;
  // The stored digits end in a zero run reaching the depth horizon: at finite
  // depth this cannot be distinguished from an illegal all-zero tail.
  bool zero_tail_warning = false;
};

// Checks every shifted suffix against the sequence itself (lexicographic
// domination) up to the stored depth.
AdmissibilityReport validate_admissible(const DigitSeq& d);

struct BetaInterval {
  Rational lo, hi;
  double midpoint() const { return to_double((lo + hi) / 2); }
  double width() const { return to_double(hi - lo); }
};

// Solves sum_i c_i x^{-i} = 1 for x > 1 by bisection with certified
// directional rounding. Periodic certificates close the tail sum exactly;
// otherwise the truncation error is bracketed using digits <= alphabet-1.
// Raises NoRoot when the root is certified integral (or forced to 1).
BetaInterval beta_from_digits(const DigitSeq& d, const Rational& tol);

// Fast double-precision root of the truncated digit sum, for display in
// reports. Use beta_from_digits for certified bounds.
double beta_estimate(const DigitSeq& d);

// Digit file format:
//   alphabet=<b>
//   <whitespace-separated digits, any line breaks>
//   period=<p>,<q>        (optional)
//   schedule=<r>,<g>      (optional)
DigitSeq read_digit_file(std::istream& in);
void write_digit_file(std::ostream& out, const DigitSeq& d);

}  // namespace betathermo
