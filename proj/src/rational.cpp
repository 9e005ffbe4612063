#include "lisstoric/rational.hpp"

#include <stdexcept>

namespace lisstoric {

BigInt floor_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);  // always > 0
  BigInt q = num / den;                                // truncates toward 0
  if (num < 0 && q * den != num) --q;
  return q;
}

long long floor_div(long long a, long long b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

int sigma_sign(const Rational& r) {
  return floor_rational(r) % 2 == 0 ? 1 : -1;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  BigInt num(digits);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace lisstoric
