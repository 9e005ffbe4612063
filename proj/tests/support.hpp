#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "lisstoric/braid.hpp"
#include "lisstoric/laurent.hpp"

namespace lisstoric::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234);
  return gen;
}

inline BraidWord random_word(int strands, int length) {
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  BraidWord w(strands);
  for (int i = 0; i < length; ++i)
    w.append(index(rng()), coin(rng()) ? 1 : -1);
  return w;
}

// Exhaustive 2^c Kauffman state sum over the braid-closure diagram, kept as
// an independent oracle for the Temperley-Lieb transfer evaluation.  Loops
// are counted with union-find on the (c+1) x n grid of strand waypoints.
inline LaurentPoly bracket_state_sum(const BraidWord& w) {
  const int n = w.strands();
  const int c = static_cast<int>(w.letters().size());
  const int nodes = (c + 1) * n;
  std::vector<int> parent(nodes);
  std::vector<int> find_stack;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  auto node = [&](int col, int row) { return col * n + row; };
  const LaurentPoly delta = LaurentPoly::monomial(PolyVar::A, -1, 2) +
                            LaurentPoly::monomial(PolyVar::A, -1, -2);
  LaurentPoly total = LaurentPoly::zero(PolyVar::A);
  for (unsigned long state = 0; state < (1ul << c); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int a_exp = 0;
    for (int x = 0; x < c; ++x) {
      const BraidLetter& letter = w.letters()[x];
      int i = letter.index;
      bool cap = (state >> x) & 1;
      a_exp += cap ? -letter.sign : letter.sign;
      for (int r = 0; r < n; ++r) {
        if (cap && (r == i - 1 || r == i)) continue;
        unite(node(x, r), node(x + 1, r));
      }
      if (cap) {
        unite(node(x, i - 1), node(x, i));
        unite(node(x + 1, i - 1), node(x + 1, i));
      }
    }
    for (int r = 0; r < n; ++r) unite(node(c, r), node(0, r));
    int loops = 0;
    for (int v = 0; v < nodes; ++v)
      if (find(v) == v) ++loops;
    total += LaurentPoly::monomial(PolyVar::A, 1, a_exp) * delta.pow(loops - 1);
  }
  return total;
}

}  // namespace lisstoric::testing
