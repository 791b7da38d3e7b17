#include "lieinv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lieinv {

namespace {

Integer pow10(long n) {
  Integer r = 1;
  for (long i = 0; i < n; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  Integer mantissa = 0;
  long scale = 0;
  bool digits = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      digits = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!digits) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      eneg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("malformed exponent in '" + std::string(s) + "'");
    for (; pos < s.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("malformed exponent in '" + std::string(s) + "'");
      exponent = exponent * 10 + (s[pos] - '0');
      if (exponent > 4000) throw std::invalid_argument("exponent out of range");
    }
    if (eneg) exponent = -exponent;
  }
  if (pos != s.size()) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  const long net = exponent - scale;
  Rational value = net >= 0 ? Rational(mantissa * pow10(net)) : Rational(mantissa, pow10(-net));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  const Rational num = parse_decimal(s.substr(0, slash));
  const Rational den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  const Integer rn = boost::multiprecision::sqrt(n);
  const Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace lieinv
