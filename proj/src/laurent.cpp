#include "lisstoric/laurent.hpp"

#include <stdexcept>

namespace lisstoric {

const char* poly_var_name(PolyVar v) { return v == PolyVar::A ? "A" : "t"; }

LaurentPoly LaurentPoly::monomial(PolyVar var, BigInt coeff, int exponent) {
  LaurentPoly p(var);
  if (coeff != 0) p.terms_[exponent] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(const BigInt& coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same_var(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() != b.var())
    throw std::invalid_argument("LaurentPoly: mixed variables");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_var(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_var(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  require_same_var(*this, o);
  LaurentPoly r(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(c1 * c2, e1 + e2);
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly r = one(var_);
  for (int j = 0; j < k; ++j) r *= *this;
  return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  const std::string var = poly_var_name(var_);
  std::string out;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text, PolyVar var) {
  LaurentPoly p(var);
  const std::string vname = poly_var_name(var);
  std::size_t pos = 0;
  int sign = 1;
  auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  skip_ws();
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  while (true) {
    skip_ws();
    if (pos >= text.size())
      throw std::invalid_argument("LaurentPoly::parse: dangling sign");
    // coefficient magnitude (optional when a variable follows)
    BigInt mag = 1;
    bool saw_digits = false;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos > start) {
      mag = BigInt(text.substr(start, pos - start));
      saw_digits = true;
    }
    if (pos < text.size() && text[pos] == '*') ++pos;
    int exponent = 0;
    if (text.compare(pos, vname.size(), vname) == 0) {
      pos += vname.size();
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (pos == estart)
          throw std::invalid_argument("LaurentPoly::parse: bad exponent");
        exponent = std::stoi(text.substr(estart, pos - estart));
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("LaurentPoly::parse: expected term at '" +
                                  text.substr(start) + "'");
    }
    p.add_term(sign * mag, exponent);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '+')
      sign = 1;
    else if (text[pos] == '-')
      sign = -1;
    else
      throw std::invalid_argument("LaurentPoly::parse: unexpected '" +
                                  text.substr(pos, 1) + "'");
    ++pos;
  }
  return p;
}

}  // namespace lisstoric
