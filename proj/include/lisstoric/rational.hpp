#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lisstoric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor toward -infinity, e.g. floor_rational(-4/3) == -2.  Every sign formula
// in this project depends on this convention; truncation would be wrong.
BigInt floor_rational(const Rational& r);

// Same convention for machine integers, b > 0.
long long floor_div(long long a, long long b);

bool is_integer(const Rational& r);

// (-1)^floor(r).
int sigma_sign(const Rational& r);

// Accepts "num/den" or a plain decimal like "-1.03125"; both are exact.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& r);  // always "num/den"

}  // namespace lisstoric
