#include "betathermo/numeric.hpp"

#include <cctype>
#include <sstream>

#include "betathermo/errors.hpp"

namespace betathermo {

Integer rfloor(const Rational& x) {
  Integer num = numerator(x), den = denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Integer rceil(const Rational& x) {
  Integer num = numerator(x), den = denominator(x);
  Integer q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

bool is_integral(const Rational& x) { return denominator(x) == 1; }

Rational round_down(const Rational& x, unsigned bits) {
  Integer scale = Integer(1) << bits;
  return Rational(rfloor(x * scale), scale);
}

Rational round_up(const Rational& x, unsigned bits) {
  Integer scale = Integer(1) << bits;
  return Rational(rceil(x * scale), scale);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational rational_from_decimal(const std::string& text, int* places) {
  std::string t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  auto dot = t.find('.');
  std::string ip = dot == std::string::npos ? t : t.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : t.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw InvalidInput("empty decimal literal: '" + text + "'");
  for (char c : ip + fp)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidInput("bad decimal literal: '" + text + "'");
  Integer num = 0;
  for (char c : ip + fp) num = num * 10 + (c - '0');
  if (neg) num = -num;
  Integer den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  if (places) *places = static_cast<int>(fp.size());
  return Rational(num, den);
}

std::string rational_str(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

}  // namespace betathermo
