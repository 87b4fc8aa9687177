#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace betathermo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer rfloor(const Rational& x);
Integer rceil(const Rational& x);
bool is_integral(const Rational& x);

// Dyadic outward rounding to `bits` fractional bits: round_down(x) <= x <= round_up(x).
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

double to_double(const Rational& x);

// Exact value of a decimal literal such as "1.8392867552".
// places receives the number of digits after the point (0 if none).
Rational rational_from_decimal(const std::string& text, int* places);

std::string rational_str(const Rational& x);

}  // namespace betathermo
