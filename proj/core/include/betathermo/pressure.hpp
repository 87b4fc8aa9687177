#pragma once

#include <vector>

#include "betathermo/automaton.hpp"
#include "betathermo/potential.hpp"

namespace betathermo {

// Normalized log of the full configuration sum on positions -n..n:
// log_partition / (2n+1). Converges to the pressure from above for the
// entropy case (the padded words over-count freely extendable mass).
double pressure_full(const PrefixAutomaton& a, const Potential& phi, int n);

// Normalized log of the free-word sum at word length 2n+1:
// log_free_word_sum(2n+1) / (2n+1). Shares no intermediate quantities with
// pressure_full, so the two act as mutual cross-checks.
double pressure_free_words(const PrefixAutomaton& a, const Potential& phi, int n);

// One step of Aitken delta-squared acceleration applied to the last three
// entries; falls back to the final entry when the second difference is too
// small to divide by.
double aitken_accelerate(const std::vector<double>& seq);

struct PressureEstimate {
  std::vector<double> full;        // pressure_full at n = 0..n_max
  std::vector<double> free_words;  // pressure_free_words at n = 0..n_max
  double full_accel = 0.0;
  double free_accel = 0.0;
  double value = 0.0;   // mean of the two accelerated limits
  double spread = 0.0;  // |full - free_words| at n_max, an agreement check
};

PressureEstimate estimate_pressure(const PrefixAutomaton& a, const Potential& phi, int n_max);

}  // namespace betathermo
