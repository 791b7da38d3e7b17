#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lieinv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-2/5", "0.125", "1e-3" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Exact square root when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace lieinv
