#include "lisstoric/invariants.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lisstoric {

PlanarMatching::PlanarMatching(int strands) {
  if (strands < 1) throw std::invalid_argument("PlanarMatching: strands must be >= 1");
  match_.resize(2 * strands);
  for (int r = 0; r < strands; ++r) {
    int rp = 2 * strands - 1 - r;
    match_[r] = rp;
    match_[rp] = r;
  }
}

int PlanarMatching::absorb_cap_cup(int i) {
  int n = strands();
  if (i < 1 || i > n - 1) throw std::invalid_argument("absorb_cap_cup: bad row index");
  int pa = right_point(i - 1), pb = right_point(i);
  if (match_[pa] == pb) return 1;  // cap closes the arc; cup restores the pair
  int x = match_[pa], y = match_[pb];
  match_[x] = y;
  match_[y] = x;
  match_[pa] = pb;
  match_[pb] = pa;
  return 0;
}

int PlanarMatching::closure_loops() const {
  int total = static_cast<int>(match_.size());
  std::vector<bool> seen(total, false);
  int loops = 0;
  for (int start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++loops;
    int cur = start;
    do {
      seen[cur] = true;
      int other = match_[cur];
      seen[other] = true;
      cur = total - 1 - other;  // trace-closure arc joins row r's two sides
    } while (cur != start);
  }
  return loops;
}

std::size_t PlanarMatching::Hash::operator()(const PlanarMatching& m) const {
  std::size_t h = 1469598103934665603ull;
  for (int p = 0; p < 2 * m.strands(); ++p) {
    h ^= static_cast<std::size_t>(m.partner(p));
    h *= 1099511628211ull;
  }
  return h;
}

int closure_component_count(const BraidWord& w) {
  return permutation(w).cycle_count();
}

int strand_limit() {
  const char* env = std::getenv("LISSATORIC_STRAND_LIMIT");
  if (env == nullptr || *env == '\0') return 10;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) return 10;
  return static_cast<int>(v);
}

LaurentPoly kauffman_bracket(const BraidWord& w) {
  int n = w.strands();
  if (n > strand_limit())
    throw std::domain_error("kauffman_bracket: " + std::to_string(n) +
                            " strands exceeds limit " + std::to_string(strand_limit()) +
                            " (override with LISSATORIC_STRAND_LIMIT)");
  const LaurentPoly delta = LaurentPoly::monomial(PolyVar::A, -1, 2) +
                            LaurentPoly::monomial(PolyVar::A, -1, -2);
  const LaurentPoly a_pos = LaurentPoly::monomial(PolyVar::A, 1, 1);
  const LaurentPoly a_neg = LaurentPoly::monomial(PolyVar::A, 1, -1);
  TLVector v;
  v.strands = n;
  v.terms.emplace(PlanarMatching(n), LaurentPoly::one(PolyVar::A));
  for (const BraidLetter& letter : w.letters()) {
    const LaurentPoly& straight = letter.sign > 0 ? a_pos : a_neg;
    const LaurentPoly& smoothed = letter.sign > 0 ? a_neg : a_pos;
    decltype(v.terms) next;
    next.reserve(v.terms.size() * 2);
    auto accumulate = [&next](PlanarMatching&& m, LaurentPoly&& c) {
      auto [it, inserted] = next.try_emplace(std::move(m), std::move(c));
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    for (auto& [m, c] : v.terms) {
      PlanarMatching capped = m;
      int loops = capped.absorb_cap_cup(letter.index);
      LaurentPoly cap_coeff = c * smoothed;
      if (loops) cap_coeff *= delta;
      accumulate(std::move(capped), std::move(cap_coeff));
      accumulate(PlanarMatching(m), c * straight);
    }
    v.terms = std::move(next);
  }
  LaurentPoly result = LaurentPoly::zero(PolyVar::A);
  for (const auto& [m, c] : v.terms)
    result += c * delta.pow(m.closure_loops() - 1);
  return result;
}

LaurentPoly jones_polynomial(const BraidWord& w) {
  if (closure_component_count(w) != 1)
    throw std::domain_error("jones_polynomial: closure is not a knot (" +
                            std::to_string(closure_component_count(w)) +
                            " components)");
  int e = exponent_sum(w);
  LaurentPoly f = LaurentPoly::monomial(PolyVar::A, e % 2 == 0 ? 1 : -1, -3 * e) *
                  kauffman_bracket(w);
  LaurentPoly out = LaurentPoly::zero(PolyVar::t);
  for (const auto& [a_exp, coeff] : f.terms()) {
    if (((a_exp % 4) + 4) % 4 != 0)
      throw std::logic_error("jones_polynomial: residual A-exponent " +
                             std::to_string(a_exp) + " not divisible by 4");
    out.add_term(coeff, -a_exp / 4);
  }
  return out;
}

bool is_palindromic(const LaurentPoly& v) { return v == v.reciprocal(); }

int rudolph_genus(int strands, int factors) {
  int v = 1 - strands + factors;
  if (v < 0 || v % 2 != 0)
    throw std::domain_error("rudolph_genus: 1 - n + k = " + std::to_string(v) +
                            " is not an even non-negative integer");
  return v / 2;
}

}  // namespace lisstoric
