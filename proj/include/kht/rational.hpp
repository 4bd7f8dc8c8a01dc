#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace kht {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// Parses "3", "-0.25", "7/2" into an exact rational.
Rational rational_from_decimal(std::string_view text);

/// "num/den" form ("3" when the denominator is 1).
std::string to_fraction_string(const Rational& q);

/// Decimal form with 15 significant digits.
std::string to_decimal_string(const Rational& q);

/// printf "%.15g" formatting, shared by the CSV and JSON emitters.
std::string fmt15(double x);

}  // namespace kht
