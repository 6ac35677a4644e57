#include "pqosc/rational.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pqosc {

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("rational_pow: zero base with negative exponent");
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (k > 0) {
    if (k & 1ul) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = (s[i] == '-');
    ++i;
  }

  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  long exponent = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.') {
      if (seen_point) throw std::invalid_argument("parse_rational: bad number '" + text + "'");
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      exponent = std::stol(s.substr(i + 1));
      break;
    } else {
      throw std::invalid_argument("parse_rational: bad number '" + text + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_rational: bad number '" + text + "'");

  BigInt mantissa(digits.empty() ? "0" : digits);
  if (negative) mantissa = -mantissa;
  Rational value(mantissa);
  long shift = exponent - frac_digits;
  if (shift != 0) value *= rational_pow(Rational(10), shift);
  return value;
}

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                   29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                   67, 71, 73, 79, 83, 89, 97};

// Pulls square factors out of w (w > 0): returns g with w = g^2 * m, and
// replaces w by m.
BigInt extract_square_part(BigInt& w) {
  BigInt g(1);
  BigInt rem;
  BigInt root = sqrt(w, rem);
  if (rem == 0) {
    g = root;
    w = 1;
    return g;
  }
  for (unsigned p : kSmallPrimes) {
    BigInt p2 = BigInt(p) * p;
    while (w % p2 == 0) {
      w /= p2;
      g *= p;
    }
  }
  root = sqrt(w, rem);
  if (rem == 0) {
    g *= root;
    w = 1;
  }
  return g;
}

}  // namespace

std::pair<Rational, Rational> canonical_sqrt(const Rational& s) {
  if (s < 0) throw std::domain_error("canonical_sqrt: negative radicand");
  if (s == 0) return {Rational(0), Rational(1)};
  BigInt u = numerator(s);
  BigInt v = denominator(s);
  // sqrt(u/v) = sqrt(u*v)/v
  BigInt w = u * v;
  BigInt g = extract_square_part(w);
  return {Rational(g, v), Rational(w)};
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace pqosc
