#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "lisstoric/braid.hpp"
#include "lisstoric/laurent.hpp"

namespace lisstoric {

// Crossingless perfect matching of the 2n boundary points of a tangle box.
// Point layout (circular): 0..n-1 run down the left side, n..2n-1 back up the
// right side, so left row r is point r and right row r is point 2n-1-r.
// Planarity is preserved by construction: the identity matching is planar and
// absorbing a cap-cup keeps it so.
class PlanarMatching {
 public:
  explicit PlanarMatching(int strands);  // identity tangle

  int strands() const { return static_cast<int>(match_.size()) / 2; }
  int partner(int point) const { return match_[point]; }
  int right_point(int row) const { return 2 * strands() - 1 - row; }

  // Multiplies on the right by the cap-cup tangle e_i (rows i-1 and i).
  // Returns the number of closed loops swallowed (0 or 1).
  int absorb_cap_cup(int i);

  // Loop count of the trace closure (right row r glued back to left row r).
  int closure_loops() const;

  bool operator==(const PlanarMatching&) const = default;

  struct Hash {
    std::size_t operator()(const PlanarMatching& m) const;
  };

 private:
  std::vector<int> match_;
};

// Sparse element of the Temperley-Lieb algebra TL_n over Z[A,A^-1].
struct TLVector {
  int strands = 0;
  std::unordered_map<PlanarMatching, LaurentPoly, PlanarMatching::Hash> terms;
};

int closure_component_count(const BraidWord& w);

// Bracket strand bound; default 10, overridable via LISSATORIC_STRAND_LIMIT
// (the planar basis grows as Catalan numbers).
int strand_limit();

// Bracket polynomial of the trace closure via the Temperley-Lieb transfer:
// each positive letter maps to A*(identity) + A^-1*(cap-cup), negative
// letters swap A and A^-1, loops contribute delta = -A^2 - A^-2, and the
// result is normalized so a 1-strand closure (unknot) gives 1.
LaurentPoly kauffman_bracket(const BraidWord& w);

// V(t) for knot closures: (-A)^{-3*exponent_sum} * bracket, re-expressed in
// t = A^-4.  Multi-component closures are rejected; a remaining A-exponent
// not divisible by 4 indicates an internal inconsistency.
LaurentPoly jones_polynomial(const BraidWord& w);

bool is_palindromic(const LaurentPoly& v);

// 4-ball genus from a quasipositive factorization with `factors` conjugated
// positive generators on `strands` strands: g4 = (1 - strands + factors)/2.
int rudolph_genus(int strands, int factors);

}  // namespace lisstoric
