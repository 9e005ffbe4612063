#pragma once

#include <map>
#include <string>

#include "lisstoric/rational.hpp"

namespace lisstoric {

enum class PolyVar { A, t };

const char* poly_var_name(PolyVar v);

// Sparse Laurent polynomial with big-integer coefficients.  Zero coefficients
// are never stored; equality is variable tag plus term-map equality.
class LaurentPoly {
 public:
  explicit LaurentPoly(PolyVar var = PolyVar::t) : var_(var) {}

  static LaurentPoly zero(PolyVar var) { return LaurentPoly(var); }
  static LaurentPoly one(PolyVar var) { return monomial(var, 1, 0); }
  static LaurentPoly monomial(PolyVar var, BigInt coeff, int exponent);

  // Inverse of str(); also accepts "0".
  static LaurentPoly parse(const std::string& text, PolyVar var = PolyVar::t);

  PolyVar var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int exponent) const;
  int min_exponent() const;  // undefined (throws) on zero
  int max_exponent() const;

  void add_term(const BigInt& coeff, int exponent);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  LaurentPoly pow(int k) const;  // k >= 0

  // Substitutes var -> var^-1 (negates every exponent).
  LaurentPoly reciprocal() const;

  // Text form: terms in ascending exponent order joined by " + "/" - ",
  // unit coefficients and ^1 suppressed, e.g. "t^-2 - t^-1 + 1 - t + t^2".
  std::string str() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  PolyVar var_;
  std::map<int, BigInt> terms_;
};

}  // namespace lisstoric
