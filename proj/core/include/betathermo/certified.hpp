#pragma once

#include <optional>
#include <string>

#include "betathermo/numeric.hpp"

namespace betathermo {

// Exact element a + b*sqrt(d) of a real quadratic field.
//
// d >= 0 and is never a perfect square when b != 0 (square radicands are
// folded into the rational part at construction). Values with b == 0 are
// normalized to d == 0 so plain rationals compare regardless of origin.
// Mixed-field arithmetic is rejected: operands must share d unless one side
// is rational.
class QuadExt {
 public:
  QuadExt() = default;
  explicit QuadExt(Rational a) : a_(std::move(a)) {}
  QuadExt(Rational a, Rational b, Integer d);

  const Rational& rat() const { return a_; }
  const Rational& coeff() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator-() const;
  QuadExt operator-(const Rational& q) const;
  QuadExt operator*(const Rational& q) const;

  // Sign of the exact value: -1, 0, or +1. No rounding involved.
  int sign() const;
  // Exact three-way comparison against a rational.
  int compare(const Rational& q) const;
  bool is_integer() const;
  Integer floor() const;
  Integer ceil() const;

  double approx() const;

  bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
  // Strict weak order usable as a map key; not the numeric order.
  bool operator<(const QuadExt& o) const;

  std::string str() const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Integer d_ = 0;
};

// A real number beta known to lie in [lo, hi], optionally with an exact
// quadratic-field (or rational) value. Exact values never lose precision;
// interval-only values come from decimal input and stay intervals.
struct CertifiedReal {
  Rational lo = 1, hi = 1;
  std::optional<QuadExt> exact;

  bool is_exact() const { return exact.has_value(); }
  bool exact_integer() const { return exact && exact->is_integer(); }
  double midpoint() const { return to_double((lo + hi) / 2); }
  double width() const { return to_double(hi - lo); }

  static CertifiedReal from_rational(const Rational& v);
  static CertifiedReal from_quadratic(const QuadExt& v);
  // Decimal text maps to the half-ulp interval around its exact value:
  // "1.84" -> [1.835, 1.845].
  static CertifiedReal from_decimal(const std::string& text);
};

// Parse a base expression. Accepted forms:
//   "3/2"              exact rational
//   "2"                exact integer (rejected later by the expansion)
//   "(1+sqrt 5)/2"     exact quadratic; also "(3-2*sqrt(2))/4", "sqrt(2)", "1+sqrt 2"
//   "1.8392867552"     decimal, treated as a certified interval
CertifiedReal parse_beta(const std::string& expr);

}  // namespace betathermo
