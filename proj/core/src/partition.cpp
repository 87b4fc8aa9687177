#include "betathermo/partition.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "betathermo/errors.hpp"
#include "betathermo/suffix.hpp"

namespace betathermo {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

void LogSumExp::add(double log_term) {
  if (log_term == kNegInf) return;
  if (log_term > shift_) {
    if (count_ > 0) {
      double f = std::exp(shift_ - log_term);
      sum_ *= f;
      comp_ *= f;
    }
    shift_ = log_term;
  }
  double term = std::exp(log_term - shift_);
  double y = term - comp_;
  double t = sum_ + y;
  comp_ = (t - sum_) - y;
  sum_ = t;
  ++count_;
}

double LogSumExp::value() const {
  if (count_ == 0 || sum_ <= 0.0) return kNegInf;
  return shift_ + std::log(sum_);
}

namespace {

struct DpSpec {
  long t_begin = 0;   // first letter position of the scanned block
  long t_end = 0;     // last letter position
  long term_lo = 0;   // potential terms are counted for shifts in
  long term_hi = 0;   // [term_lo, term_hi]
  const PinnedWindow* pin = nullptr;
  bool fresh_at_pin = false;  // require empty matched suffix entering pin->k
  bool fresh_at_end = false;  // keep only words with empty matched suffix
};

// Left-to-right scan over letter positions, followed by a short run of
// forced padding zeros so every potential window inside [term_lo, term_hi]
// is completed. The key tracks the automaton state, whether the matched
// suffix is currently empty, and the last window-1 letters (for the
// potential lookup). Padding positions advance only the letter context:
// appending zeros on the right of an admissible word is always admissible,
// so the automaton state and freshness are frozen there.
double run_dp(const PrefixAutomaton& a, const Potential& phi, const DpSpec& s) {
  const int A = a.alphabet();
  const int W = phi.window();
  std::size_t ctx_size = 1;
  for (int i = 0; i + 1 < W; ++i) ctx_size *= static_cast<std::size_t>(A);
  const std::size_t nstates = static_cast<std::size_t>(a.states());
  const std::size_t nkeys = nstates * 2 * ctx_size;
  auto key = [ctx_size](std::size_t st, int fresh, std::size_t ctx) {
    return (st * 2 + static_cast<std::size_t>(fresh)) * ctx_size + ctx;
  };

  std::vector<double> cur(nkeys, kNegInf), nxt(nkeys, kNegInf);
  cur[key(0, 1, 0)] = 0.0;

  const long scan_end = s.t_end + phi.right();
  for (long t = s.t_begin; t <= scan_end; ++t) {
    const bool padding = t > s.t_end;
    if (!padding && s.pin && s.fresh_at_pin && t == s.pin->k) {
      for (std::size_t st = 0; st < nstates; ++st)
        for (std::size_t ctx = 0; ctx < ctx_size; ++ctx) cur[key(st, 0, ctx)] = kNegInf;
    }
    const bool pinned_here = !padding && s.pin && t >= s.pin->k && t <= s.pin->l();
    const int forced = pinned_here ? s.pin->v[static_cast<std::size_t>(t - s.pin->k)]
                                   : (padding ? 0 : -1);
    const bool count_term = t - phi.right() >= s.term_lo && t - phi.right() <= s.term_hi;

    std::fill(nxt.begin(), nxt.end(), kNegInf);
    for (std::size_t st = 0; st < nstates; ++st) {
      for (int fresh = 0; fresh < 2; ++fresh) {
        for (std::size_t ctx = 0; ctx < ctx_size; ++ctx) {
          double lw = cur[key(st, fresh, ctx)];
          if (lw == kNegInf) continue;
          int lo = forced >= 0 ? forced : 0;
          int hi = forced >= 0 ? forced : A - 1;
          for (int letter = lo; letter <= hi; ++letter) {
            std::size_t st2 = st;
            int fresh2 = fresh;
            if (!padding) {
              int next = a.step(static_cast<int>(st), letter);
              if (next < 0) continue;
              st2 = static_cast<std::size_t>(next);
              fresh2 = letter < a.spine_digit(static_cast<int>(st)) ? 1 : 0;
            }
            std::size_t ctx2 = (ctx * static_cast<std::size_t>(A) + static_cast<std::size_t>(letter)) %
                               std::max<std::size_t>(ctx_size, 1);
            if (ctx_size == 1) ctx2 = 0;
            double w2 = lw;
            if (count_term)
              w2 += phi.value_by_index(ctx * static_cast<std::size_t>(A) +
                                       static_cast<std::size_t>(letter));
            std::size_t k2 = key(st2, fresh2, ctx2);
            nxt[k2] = log_add(nxt[k2], w2);
          }
        }
      }
    }
    cur.swap(nxt);
  }

  LogSumExp total;
  for (std::size_t st = 0; st < nstates; ++st)
    for (int fresh = s.fresh_at_end ? 1 : 0; fresh < 2; ++fresh)
      for (std::size_t ctx = 0; ctx < ctx_size; ++ctx) total.add(cur[key(st, fresh, ctx)]);
  return total.value();
}

void check_pin(int n, const PinnedWindow& pin) {
  if (pin.v.empty()) throw InvalidInput("pinned word must be nonempty");
  if (pin.k < -n || pin.l() > n)
    throw InvalidInput("pinned positions [" + std::to_string(pin.k) + ", " +
                       std::to_string(pin.l()) + "] fall outside [-" + std::to_string(n) + ", " +
                       std::to_string(n) + "]");
}

}  // namespace

double log_partition(const PrefixAutomaton& a, const Potential& phi, int n) {
  if (n < 0) throw InvalidInput("window parameter must be >= 0");
  DpSpec s;
  s.t_begin = -n;
  s.t_end = n;
  s.term_lo = -n;
  s.term_hi = n;
  return run_dp(a, phi, s);
}

double log_partition_pinned(const PrefixAutomaton& a, const Potential& phi, int n,
                            const PinnedWindow& pin) {
  if (n < 0) throw InvalidInput("window parameter must be >= 0");
  check_pin(n, pin);
  DpSpec s;
  s.t_begin = -n;
  s.t_end = n;
  s.term_lo = -n;
  s.term_hi = n;
  s.pin = &pin;
  return run_dp(a, phi, s);
}

double log_partition_pinned_fresh(const PrefixAutomaton& a, const Potential& phi, int n,
                                  const PinnedWindow& pin) {
  if (n < 0) throw InvalidInput("window parameter must be >= 0");
  check_pin(n, pin);
  DpSpec s;
  s.t_begin = -n;
  s.t_end = n;
  s.term_lo = -n;
  s.term_hi = n;
  s.pin = &pin;
  s.fresh_at_pin = true;
  return run_dp(a, phi, s);
}

double log_free_word_sum(const PrefixAutomaton& a, const Potential& phi, int length) {
  if (length < 1) throw InvalidInput("word length must be >= 1");
  DpSpec s;
  s.t_begin = 0;
  s.t_end = length - 1;
  s.term_lo = 0;
  s.term_hi = length - 1;
  s.fresh_at_end = true;
  return run_dp(a, phi, s);
}

PinnedBoundsReport pinned_bounds_report(const DigitSeq& d, const PrefixAutomaton& a,
                                        const Potential& phi, int n, long k, const Word& v) {
  PinnedBoundsReport rep;
  rep.hat = hat_word(d, a, v);
  SuffixInfo info = suffix_info(d, a, v);
  if (!info.zero_run.resolved)
    throw DepthExceeded("zero run after the matched suffix is unresolved at the stored depth");
  ZeroRun z1 = zero_run_after(d, 1);
  if (!z1.resolved)
    throw DepthExceeded("zero run after the first digit is unresolved at the stored depth");

  PinnedWindow pv{k, v};
  PinnedWindow ph{k, rep.hat};
  rep.log_pinned = log_partition_pinned(a, phi, n, pv);
  rep.log_pinned_fresh = log_partition_pinned_fresh(a, phi, n, pv);
  rep.log_pinned_fresh_hat = log_partition_pinned_fresh(a, phi, n, ph);

  double osc = phi.total_osc();
  // The left-history rewrite is at most (z1+3)-to-1 — sharp for some
  // non-Markov bases (e.g. 3/2, pin 000 at the right edge) — so the upper
  // constant uses z1+3.
  rep.upper_constant_log = std::log(static_cast<double>(z1.length) + 3.0) + 2.0 * osc;
  rep.lower_constant_log =
      -(static_cast<double>(info.zero_run.length) + 1.0) * std::log(static_cast<double>(a.alphabet())) -
      (static_cast<double>(info.zero_run.length) + 2.0) * osc;

  const double slack = 1e-9;
  rep.holds = rep.log_pinned_fresh <= rep.log_pinned + slack &&
              rep.log_pinned <= rep.upper_constant_log + rep.log_pinned_fresh_hat + slack &&
              rep.log_pinned_fresh >= rep.lower_constant_log + rep.log_pinned_fresh_hat - slack;
  return rep;
}

}  // namespace betathermo
