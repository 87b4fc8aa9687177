#include "betathermo/digits.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "betathermo/errors.hpp"

namespace betathermo {

int DigitSeq::digit(long i) const {
  if (i < 1) throw InvalidInput("digit index must be >= 1");
  long n = depth();
  if (i <= n) return digits[static_cast<std::size_t>(i - 1)];
  if (!periodicity)
    throw DepthExceeded("digit index " + std::to_string(i) + " exceeds stored depth " +
                        std::to_string(n) + " and no periodicity certificate is present");
  long p = periodicity->preperiod, q = periodicity->period;
  long j = p + ((i - p - 1) % q) + 1;
  return digits[static_cast<std::size_t>(j - 1)];
}

void check_structure(const DigitSeq& d) {
  if (d.digits.empty()) throw InvalidInput("digit sequence is empty");
  if (d.alphabet < 2) throw InvalidInput("alphabet must be at least 2");
  for (std::size_t i = 0; i < d.digits.size(); ++i)
    if (d.digits[i] < 0 || d.digits[i] >= d.alphabet)
      throw InvalidInput("digit " + std::to_string(d.digits[i]) + " at position " +
                         std::to_string(i + 1) + " outside alphabet {0.." +
                         std::to_string(d.alphabet - 1) + "}");
  if (d.digits[0] != d.alphabet - 1)
    throw InvalidInput("first digit must equal alphabet-1 (got " + std::to_string(d.digits[0]) +
                       " with alphabet " + std::to_string(d.alphabet) + ")");
  if (d.periodicity) {
    int p = d.periodicity->preperiod, q = d.periodicity->period;
    int n = d.depth();
    if (p < 0 || q < 1 || p + q > n)
      throw InvalidInput("periodicity certificate (" + std::to_string(p) + "," + std::to_string(q) +
                         ") needs at least preperiod+period stored digits");
    for (int i = p + 1; i + q <= n; ++i)
      if (d.digits[i - 1 + q] != d.digits[i - 1])
        throw InvalidInput("stored digits contradict periodicity certificate at index " +
                           std::to_string(i + q));
    bool all_zero = true;
    for (int j = p + 1; j <= p + q; ++j) all_zero = all_zero && d.digits[j - 1] == 0;
    if (all_zero) throw InvalidInput("periodic window is all zeros; the sequence would end in zeros");
  }
  if (d.schedule) {
    long r = d.schedule->first_run, g = d.schedule->growth;
    if (r < 1 || g < 2) throw InvalidInput("zero-run schedule needs first_run >= 1, growth >= 2");
    std::vector<int> pat;
    long run = r;
    while (static_cast<int>(pat.size()) < d.depth()) {
      pat.push_back(d.alphabet - 1);
      for (long z = 0; z < run && static_cast<int>(pat.size()) < d.depth(); ++z) pat.push_back(0);
      run *= g;
    }
    for (int i = 0; i < d.depth(); ++i)
      if (pat[i] != d.digits[i])
        throw InvalidInput("stored digits contradict the declared zero-run schedule at index " +
                           std::to_string(i + 1));
  }
}

unsigned default_precision_cap() {
  if (const char* env = std::getenv("BETATHERMO_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 16 && v <= (1L << 24)) return static_cast<unsigned>(v);
  }
  return 4096;
}

namespace {

DigitSeq expand_exact(const QuadExt& beta, int depth) {
  if (beta.is_integer()) throw IntegerBeta("beta = " + beta.str() + " is an integer");
  Integer bc = beta.ceil();
  if (bc < 2 || bc > 1000000) throw InvalidInput("alphabet ceil(beta) out of range: " + bc.str());
  int b = bc.convert_to<int>();

  DigitSeq out;
  out.alphabet = b;
  out.source = DigitSource::Computed;

  // Residual repetition r_i == r_j certifies (preperiod j, period i-j); once
  // found, the remaining digits are filled from the certificate.
  std::map<QuadExt, int> seen;
  QuadExt r{Rational(1)};
  for (int i = 0; i < depth; ++i) {
    auto it = seen.find(r);
    if (it != seen.end()) {
      out.periodicity = Periodicity{it->second, i - it->second};
      break;
    }
    seen.emplace(r, i);
    QuadExt t = beta * r;
    Integer c = t.ceil() - 1;
    out.digits.push_back(c.convert_to<int>());
    r = t - Rational(c);
  }
  if (out.periodicity) {
    int p = out.periodicity->preperiod, q = out.periodicity->period;
    while (out.depth() < depth) out.digits.push_back(out.digits[p + (out.depth() - p) % q]);
  }
  return out;
}

// One certified pass at a fixed dyadic working precision. Returns false on an
// ambiguous ceiling (caller escalates).
bool expand_interval_attempt(const Rational& blo, const Rational& bhi, int depth, unsigned bits,
                             std::vector<int>* digits) {
  digits->clear();
  Rational rlo = 1, rhi = 1;
  for (int i = 0; i < depth; ++i) {
    Rational tlo = round_down(blo * rlo, bits);
    Rational thi = round_up(bhi * rhi, bits);
    Integer clo = rceil(tlo), chi = rceil(thi);
    if (clo != chi) return false;
    Integer c = clo - 1;
    digits->push_back(c.convert_to<int>());
    rlo = tlo - Rational(c);
    rhi = thi - Rational(c);
    if (rlo < 0) rlo = 0;  // rounding slop; the true residual stays positive
  }
  return true;
}

}  // namespace

DigitSeq expand_one(const CertifiedReal& beta, int depth, unsigned precision_cap_bits) {
  if (depth < 1) throw InvalidInput("expansion depth must be >= 1");
  if (beta.is_exact()) return expand_exact(*beta.exact, depth);

  Integer blo_c = rceil(beta.lo), bhi_c = rceil(beta.hi);
  if (beta.lo == beta.hi && is_integral(beta.lo))
    throw IntegerBeta("beta = " + rational_str(beta.lo) + " is an integer");
  if (blo_c != bhi_c)
    throw PrecisionExhausted("alphabet ceil(beta) is ambiguous over [" + rational_str(beta.lo) +
                             ", " + rational_str(beta.hi) + "]; supply more input digits");
  if (bhi_c < 2 || bhi_c > 1000000) throw InvalidInput("alphabet ceil(beta) out of range");

  DigitSeq out;
  out.alphabet = bhi_c.convert_to<int>();
  out.source = DigitSource::Computed;
  for (unsigned bits = 64;; bits *= 2) {
    if (expand_interval_attempt(beta.lo, beta.hi, depth, bits, &out.digits)) return out;
    if (bits >= precision_cap_bits)
      throw PrecisionExhausted(
          "ceiling still ambiguous at " + std::to_string(bits) +
          " working bits (cap " + std::to_string(precision_cap_bits) +
          "); the input interval does not pin down digit " + std::to_string(out.digits.size() + 1));
  }
}

AdmissibilityReport validate_admissible(const DigitSeq& d) {
  check_structure(d);
  AdmissibilityReport rep;
  int n = d.depth();
  for (int k = 1; k < n && rep.admissible; ++k) {
    for (int t = 0; t < n - k; ++t) {
      int a = d.digits[k + t], b = d.digits[t];
      if (a < b) break;
      if (a > b) {
        rep.admissible = false;
        rep.shift = k;
        rep.position = t + 1;
        break;
      }
    }
  }
  if (!d.unbounded()) {
    rep.zero_tail_warning = d.digits[n - 1] == 0;
  }
  return rep;
}

namespace {

// sum c_i x^{-i}, exact. Periodic certificates close the tail; otherwise
// `upper` adds the maximal-tail bound (b-1) * x^{-N} / (x-1).
Rational digit_sum_at(const DigitSeq& d, const Rational& x, bool upper) {
  Rational inv = Rational(1) / x;
  Rational pw = 1, total = 0;
  if (d.periodicity) {
    int p = d.periodicity->preperiod, q = d.periodicity->period;
    for (int i = 1; i <= p; ++i) {
      pw *= inv;
      total += Rational(d.digits[i - 1]) * pw;
    }
    Rational xq = 1;
    for (int j = 0; j < q; ++j) xq *= x;
    Rational pwp = pw;  // x^{-p}
    Rational inner = 0, pj = 1;
    for (int j = 1; j <= q; ++j) {
      pj *= inv;
      inner += Rational(d.digits[p + j - 1]) * pj;
    }
    total += pwp * inner * xq / (xq - 1);
    return total;
  }
  int n = d.depth();
  for (int i = 1; i <= n; ++i) {
    pw *= inv;
    total += Rational(d.digits[i - 1]) * pw;
  }
  if (upper) total += Rational(d.alphabet - 1) * pw / (x - 1);
  return total;
}

// Root of the decreasing map x -> digit_sum_at(x) - 1 on (1, alphabet],
// bisected with dyadic midpoints until the bracket is narrower than tol.
// Returns a point interval on an exact hit.
BetaInterval bisect_root(const DigitSeq& d, bool upper, const Rational& tol) {
  Rational a = 1, b = d.alphabet;
  Rational sb = digit_sum_at(d, b, upper);
  if (sb == 1) return {b, b};
  // digit structure guarantees sum(alphabet) <= 1
  while (b - a > tol) {
    Rational m = (a + b) / 2;
    Rational sm = digit_sum_at(d, m, upper);
    if (sm == 1) return {m, m};
    if (sm > 1)
      a = m;
    else
      b = m;
  }
  return {a, b};
}

}  // namespace

BetaInterval beta_from_digits(const DigitSeq& d, const Rational& tol) {
  check_structure(d);
  if (tol <= 0) throw InvalidInput("tolerance must be positive");
  BetaInterval out;
  if (d.periodicity) {
    BetaInterval r = bisect_root(d, false, tol / 2);
    out.lo = r.lo;
    out.hi = r.hi;
  } else {
    BetaInterval lo_side = bisect_root(d, false, tol / 2);
    BetaInterval hi_side = bisect_root(d, true, tol / 2);
    out.lo = lo_side.lo;
    out.hi = hi_side.hi;
  }
  if (out.lo == out.hi && is_integral(out.lo))
    throw NoRoot("digits force beta = " + rational_str(out.lo) + ", an integer");
  if (out.hi <= 1) throw NoRoot("digits force beta <= 1");
  return out;
}

DigitSeq read_digit_file(std::istream& in) {
  DigitSeq d;
  std::string line;
  bool have_alphabet = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::string body = line.substr(first);
    if (body.rfind("alphabet=", 0) == 0) {
      d.alphabet = std::stoi(body.substr(9));
      have_alphabet = true;
    } else if (body.rfind("period=", 0) == 0) {
      auto comma = body.find(',');
      if (comma == std::string::npos) throw InvalidInput("period line needs 'period=<p>,<q>'");
      d.periodicity = Periodicity{std::stoi(body.substr(7, comma - 7)),
                                  std::stoi(body.substr(comma + 1))};
    } else if (body.rfind("schedule=", 0) == 0) {
      auto comma = body.find(',');
      if (comma == std::string::npos) throw InvalidInput("schedule line needs 'schedule=<r>,<g>'");
      d.schedule = ZeroRunSchedule{std::stol(body.substr(9, comma - 9)),
                                   std::stol(body.substr(comma + 1))};
    } else {
      std::istringstream ls(body);
      std::string tok;
      while (ls >> tok) {
        try {
          d.digits.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw InvalidInput("bad digit token '" + tok + "' in digit file");
        }
      }
    }
  }
  if (!have_alphabet) throw InvalidInput("digit file is missing the alphabet=<b> line");
  d.source = DigitSource::Supplied;
  check_structure(d);
  return d;
}

void write_digit_file(std::ostream& out, const DigitSeq& d) {
  out << "alphabet=" << d.alphabet << "\n";
  for (int i = 0; i < d.depth(); ++i) out << d.digits[i] << (i + 1 == d.depth() ? "" : " ");
  out << "\n";
  if (d.periodicity)
    out << "period=" << d.periodicity->preperiod << "," << d.periodicity->period << "\n";
  if (d.schedule) out << "schedule=" << d.schedule->first_run << "," << d.schedule->growth << "\n";
}

double beta_estimate(const DigitSeq& d) {
  check_structure(d);
  // Enough terms for the truncation error to vanish at double precision for
  // any base noticeably above 1; periodic sequences extend for free.
  long terms = d.unbounded() ? std::max(400, 2 * d.depth()) : d.depth();
  auto digit_sum = [&](double x) {
    double s = 0.0;
    for (long i = terms; i >= 1; --i) s = (s + static_cast<double>(d.digit(i))) / x;
    return s;
  };
  double lo = 1.0 + 1e-12, hi = static_cast<double>(d.alphabet);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (digit_sum(mid) > 1.0 ? lo : hi) = mid;  // the digit sum decreases in x
  }
  return 0.5 * (lo + hi);
}

}  // namespace betathermo
