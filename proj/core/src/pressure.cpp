#include "betathermo/pressure.hpp"

#include <cmath>
#include <cstdlib>

#include "betathermo/errors.hpp"
#include "betathermo/partition.hpp"

namespace betathermo {

double pressure_full(const PrefixAutomaton& a, const Potential& phi, int n) {
  if (n < 0) throw InvalidInput("window parameter must be >= 0");
  return log_partition(a, phi, n) / static_cast<double>(2 * n + 1);
}

double pressure_free_words(const PrefixAutomaton& a, const Potential& phi, int n) {
  if (n < 0) throw InvalidInput("window parameter must be >= 0");
  return log_free_word_sum(a, phi, 2 * n + 1) / static_cast<double>(2 * n + 1);
}

double aitken_accelerate(const std::vector<double>& seq) {
  if (seq.empty()) throw InvalidInput("cannot accelerate an empty sequence");
  if (seq.size() < 3) return seq.back();
  double p0 = seq[seq.size() - 3], p1 = seq[seq.size() - 2], p2 = seq.back();
  double dd = (p2 - p1) - (p1 - p0);
  if (std::abs(dd) < 1e-14) return p2;
  double d = p2 - p1;
  return p2 - d * d / dd;
}

PressureEstimate estimate_pressure(const PrefixAutomaton& a, const Potential& phi, int n_max) {
  if (n_max < 0) throw InvalidInput("window parameter must be >= 0");
  PressureEstimate est;
  est.full.reserve(n_max + 1);
  est.free_words.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    est.full.push_back(pressure_full(a, phi, n));
    est.free_words.push_back(pressure_free_words(a, phi, n));
  }
  est.full_accel = aitken_accelerate(est.full);
  est.free_accel = aitken_accelerate(est.free_words);
  est.value = 0.5 * (est.full_accel + est.free_accel);
  est.spread = std::abs(est.full.back() - est.free_words.back());
  return est;
}

}  // namespace betathermo
