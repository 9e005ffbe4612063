#include "lisstoric/braid.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lisstoric {

Permutation::Permutation(int n) : img_(n) {
  if (n < 1) throw std::invalid_argument("Permutation: size must be >= 1");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("Permutation::transposition: index out of range");
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size())
    throw std::invalid_argument("Permutation::then: size mismatch");
  Permutation r(size());
  for (int x = 0; x < size(); ++x) r.img_[x] = next.img_[img_[x]];
  return r;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(img_.size(), false);
  int cycles = 0;
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (int y = x; !seen[y]; y = img_[y]) seen[y] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation Permutation::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Permutation::pow: negative exponent");
  Permutation r(size());
  for (int j = 0; j < k; ++j) r = r.then(*this);
  return r;
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("BraidWord: strands must be >= 1");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : BraidWord(strands) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) append(l.index, l.sign);
}

void BraidWord::append(int index, int sign) {
  if (index < 1 || index >= strands_)
    throw std::invalid_argument("BraidWord: generator index " +
                                std::to_string(index) + " out of range for " +
                                std::to_string(strands_) + " strands");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("BraidWord: sign must be +1 or -1");
  letters_.push_back({index, sign});
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ != strands_)
    throw std::invalid_argument("BraidWord::append: strand count mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  std::vector<BraidLetter> letters;
  int max_index = 0;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 's' ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos)
      throw std::invalid_argument("BraidWord::parse: bad token '" + tok + "'");
    int index = std::stoi(tok.substr(1));
    if (index < 1)
      throw std::invalid_argument("BraidWord::parse: bad index in '" + tok + "'");
    letters.push_back({index, sign});
    if (index > max_index) max_index = index;
  }
  if (strands == 0) strands = max_index + 1;
  if (strands < 1) strands = 1;
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.append(b);
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r(w.strands());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    r.append(it->index, -it->sign);
  return r;
}

BraidWord mirror(const BraidWord& w) {
  BraidWord r(w.strands());
  for (const auto& l : w.letters()) r.append(l.index, -l.sign);
  return r;
}

BraidWord power(const BraidWord& w, int d) {
  if (d < 0) throw std::invalid_argument("power: negative exponent");
  BraidWord r(w.strands());
  for (int j = 0; j < d; ++j) r.append(w);
  return r;
}

Permutation permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (const auto& l : w.letters())
    p = p.then(Permutation::transposition(w.strands(), l.index - 1, l.index));
  return p;
}

long long exponent_sum(const BraidWord& w) {
  long long sum = 0;
  for (const auto& l : w.letters()) sum += l.sign;
  return sum;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().index == l.index &&
        stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

}  // namespace lisstoric
