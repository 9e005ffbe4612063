#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lisstoric {

// One Artin generator occurrence sigma_{index}^{sign}; index is 1-based,
// valid range [1, strands-1], sign is +1 or -1.
struct BraidLetter {
  int index;
  int sign;
  bool operator==(const BraidLetter&) const = default;
};

class Permutation {
 public:
  explicit Permutation(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }

  // Composition "this first, then next".
  Permutation then(const Permutation& next) const;
  int cycle_count() const;
  bool is_identity() const;
  bool is_single_cycle() const { return cycle_count() == 1; }
  Permutation pow(int k) const;  // k >= 0

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;  // img_[x] = image of strand position x
};

// A word in the braid group B_n, stored literally (no implicit reduction).
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<BraidLetter> letters);

  // Parses the text form "s2 s1^-1 ...".  strands == 0 infers max index + 1
  // (at least 1); an explicit strand count must accommodate every letter.
  static BraidWord parse(const std::string& text, int strands = 0);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void append(int index, int sign);
  void append(const BraidWord& other);  // strand counts must match

  // Inverse of parse; tokens joined by single spaces.
  std::string str() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord mirror(const BraidWord& w);   // negates every sign, keeps order
BraidWord power(const BraidWord& w, int d);  // d >= 0

// Image in the symmetric group; sigma_i acts as the transposition of strand
// positions (i-1, i), and the leftmost letter of the word acts first.
Permutation permutation(const BraidWord& w);

long long exponent_sum(const BraidWord& w);

// Free cancellation of adjacent sigma_i^{+1} sigma_i^{-1} pairs only; braid
// relations are deliberately not applied (equivalence beyond free equality is
// handled by invariant comparison).
BraidWord free_reduce(const BraidWord& w);

}  // namespace lisstoric
