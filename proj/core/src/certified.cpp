#include "betathermo/certified.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

#include "betathermo/errors.hpp"

namespace betathermo {

QuadExt::QuadExt(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw InvalidInput("negative radicand");
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  Integer r = boost::multiprecision::sqrt(d_);
  if (r * r == d_) {  // perfect square: fold into the rational part
    a_ += b_ * Rational(r);
    b_ = 0;
    d_ = 0;
  }
}

static void require_same_field(const QuadExt& x, const QuadExt& y) {
  if (x.radicand() != 0 && y.radicand() != 0 && x.radicand() != y.radicand())
    throw InvalidInput("mixed quadratic fields: sqrt(" + x.radicand().str() + ") vs sqrt(" +
                       y.radicand().str() + ")");
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  require_same_field(*this, o);
  Integer d = d_ != 0 ? d_ : o.d_;
  return QuadExt(a_ + o.a_, b_ + o.b_, d);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
  require_same_field(*this, o);
  Integer d = d_ != 0 ? d_ : o.d_;
  return QuadExt(a_ - o.a_, b_ - o.b_, d);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  require_same_field(*this, o);
  Integer d = d_ != 0 ? d_ : o.d_;
  return QuadExt(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, d_); }

QuadExt QuadExt::operator-(const Rational& q) const { return QuadExt(a_ - q, b_, d_); }

QuadExt QuadExt::operator*(const Rational& q) const { return QuadExt(a_ * q, b_ * q, d_); }

int QuadExt::sign() const {
  auto rsign = [](const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
  if (b_ == 0) return rsign(a_);
  if (a_ == 0) return rsign(b_);
  int sa = rsign(a_), sb = rsign(b_);
  if (sa == sb) return sa;
  // Opposite signs: the comparison reduces to a^2 vs b^2*d after squaring.
  Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
  if (sa > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

int QuadExt::compare(const Rational& q) const { return (*this - q).sign(); }

bool QuadExt::is_integer() const { return b_ == 0 && is_integral(a_); }

Integer QuadExt::floor() const {
  if (b_ == 0) return rfloor(a_);
  Integer n(static_cast<long long>(std::floor(approx())));
  while (compare(Rational(n)) < 0) --n;       // ensure n <= value
  while (compare(Rational(n + 1)) >= 0) ++n;  // make n maximal
  return n;
}

Integer QuadExt::ceil() const {
  Integer f = floor();
  return compare(Rational(f)) == 0 ? f : f + 1;
}

double QuadExt::approx() const {
  double v = to_double(a_);
  if (b_ != 0) v += to_double(b_) * std::sqrt(d_.convert_to<double>());
  return v;
}

bool QuadExt::operator<(const QuadExt& o) const {
  if (d_ != o.d_) return d_ < o.d_;
  if (a_ != o.a_) return a_ < o.a_;
  return b_ < o.b_;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  if (b_ == 0) return rational_str(a_);
  os << "(" << rational_str(a_) << (b_ > 0 ? "+" : "-") << rational_str(b_ < 0 ? -b_ : b_)
     << "*sqrt(" << d_ << "))";
  return os.str();
}

CertifiedReal CertifiedReal::from_rational(const Rational& v) {
  if (v < 1) throw InvalidInput("beta must be at least 1, got " + rational_str(v));
  CertifiedReal c;
  c.lo = c.hi = v;
  c.exact = QuadExt(v);
  return c;
}

CertifiedReal CertifiedReal::from_quadratic(const QuadExt& v) {
  if (v.is_rational()) return from_rational(v.rat());
  if (v.compare(1) < 0) throw InvalidInput("beta must be at least 1, got " + v.str());
  CertifiedReal c;
  c.exact = v;
  // Dyadic enclosure, verified by exact comparisons (the double seed may be off
  // by a few ulp, the loops repair that).
  Rational step(1, Integer(1) << 48);
  Rational mid(v.approx());
  c.lo = mid - step;
  c.hi = mid + step;
  while (v.compare(c.lo) < 0) c.lo -= step;
  while (v.compare(c.hi) > 0) c.hi += step;
  return c;
}

CertifiedReal CertifiedReal::from_decimal(const std::string& text) {
  int places = 0;
  Rational v = rational_from_decimal(text, &places);
  Rational half(1, 2);
  for (int i = 0; i < places; ++i) half /= 10;
  CertifiedReal c;
  c.lo = v - half;
  c.hi = v + half;
  if (c.hi <= 1)
    throw InvalidInput("beta interval from '" + text + "' lies entirely at or below 1");
  if (c.lo < 1) c.lo = 1;  // domain is beta > 1
  return c;
}

namespace {

struct Token {
  enum Kind { Int, Sqrt, Plus, Minus, Star, Slash, LParen, RParen, End } kind;
  Integer value;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        ++i;
      }
      out.push_back({Token::Int, v});
      continue;
    }
    if (s.compare(i, 4, "sqrt") == 0) {
      out.push_back({Token::Sqrt, 0});
      i += 4;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, 0}); break;
      case '-': out.push_back({Token::Minus, 0}); break;
      case '*': out.push_back({Token::Star, 0}); break;
      case '/': out.push_back({Token::Slash, 0}); break;
      case '(': out.push_back({Token::LParen, 0}); break;
      case ')': out.push_back({Token::RParen, 0}); break;
      default:
        throw InvalidInput(std::string("unexpected character '") + c + "' in beta expression");
    }
    ++i;
  }
  out.push_back({Token::End, 0});
  return out;
}

class QuadParser {
 public:
  explicit QuadParser(std::vector<Token> toks) : t_(std::move(toks)) {}

  // numerator := part (('+'|'-') part)* ; part := INT ['*'? sqrt radic] | sqrt radic
  // expr := '(' numerator ')' '/' INT | numerator
  QuadExt parse() {
    QuadExt v;
    if (peek() == Token::LParen) {
      get();
      v = numerator();
      expect(Token::RParen, "')'");
      if (peek() == Token::Slash) {
        get();
        Integer r = expect_int("denominator");
        if (r == 0) throw InvalidInput("zero denominator in beta expression");
        v = v * Rational(1, r);
      }
    } else {
      v = numerator();
    }
    expect(Token::End, "end of expression");
    return v;
  }

 private:
  QuadExt numerator() {
    bool lead_neg = false;
    if (peek() == Token::Minus) {
      get();
      lead_neg = true;
    }
    QuadExt v = part(lead_neg);
    while (peek() == Token::Plus || peek() == Token::Minus) {
      bool neg = get().kind == Token::Minus;
      v = v + part(neg);
    }
    return v;
  }

  QuadExt part(bool negated) {
    Rational coeff = negated ? -1 : 1;
    if (peek() == Token::Int) {
      Integer n = get().value;
      if (peek() == Token::Star || peek() == Token::Sqrt) {
        if (peek() == Token::Star) get();
        coeff *= Rational(n);
        return sqrt_term(coeff);
      }
      return QuadExt(coeff * Rational(n));
    }
    if (peek() == Token::Sqrt) return sqrt_term(coeff);
    throw InvalidInput("expected a number or sqrt in beta expression");
  }

  QuadExt sqrt_term(const Rational& coeff) {
    expect(Token::Sqrt, "sqrt");
    Integer d;
    if (peek() == Token::LParen) {
      get();
      d = expect_int("radicand");
      expect(Token::RParen, "')'");
    } else {
      d = expect_int("radicand");
    }
    return QuadExt(0, coeff, d);
  }

  Token::Kind peek() const { return t_[i_].kind; }
  Token get() { return t_[i_++]; }
  void expect(Token::Kind k, const char* what) {
    if (t_[i_].kind != k) throw InvalidInput(std::string("expected ") + what + " in beta expression");
    ++i_;
  }
  Integer expect_int(const char* what) {
    if (t_[i_].kind != Token::Int)
      throw InvalidInput(std::string("expected ") + what + " in beta expression");
    return t_[i_++].value;
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
};

}  // namespace

CertifiedReal parse_beta(const std::string& expr) {
  if (expr.empty()) throw InvalidInput("empty beta expression");
  if (expr.find("sqrt") != std::string::npos)
    return CertifiedReal::from_quadratic(QuadParser(tokenize(expr)).parse());
  if (expr.find('.') != std::string::npos) return CertifiedReal::from_decimal(expr);
  auto slash = expr.find('/');
  if (slash != std::string::npos) {
    int dummy = 0;
    Rational num = rational_from_decimal(expr.substr(0, slash), &dummy);
    Rational den = rational_from_decimal(expr.substr(slash + 1), &dummy);
    if (den == 0) throw InvalidInput("zero denominator in beta expression");
    return CertifiedReal::from_rational(num / den);
  }
  int dummy = 0;
  return CertifiedReal::from_rational(rational_from_decimal(expr, &dummy));
}

}  // namespace betathermo
