#pragma once

#include <optional>
#include <utility>

#include "lisstoric/braid.hpp"

namespace lisstoric {

// Validated parameters of a Lissajous-toric knot K(N,q,p) together with the
// reduced base pair the braid construction actually runs on.  q_base is the
// odd member of (q/d, p/d); when q/d is even the two are exchanged (the knots
// K(N,q,p) and K(N,p,q) are isotopic) and `swapped` records that.
struct BraidParams {
  int N;
  int q;
  int p;
  int d;       // gcd(q, p)
  int q_base;  // odd, coprime to p_base
  int p_base;
  bool swapped;
};

// Solution of 2*N*A + B*q == 1 (exists iff q is odd and coprime to N).
// Canonical representative: B in (-2N, 2N) with minimal |B|, ties toward
// positive B.  B is always odd.
struct BezoutPair {
  long long A;
  long long B;
};

enum class TrivialFamily { QPlusN, POne, TwoNqPlusOne, TwoNqMinusOne };

const char* trivial_family_name(TrivialFamily f);

// Arithmetic classification of the closure knot; no invariant computation.
struct Classification {
  int d = 1;
  bool ribbon = false;           // exactly the d == 1 case
  int periodic_d = 1;            // the braid is a periodic_d-th power
  int genus_bound = 0;           // 4-ball genus <= (N-1)(d-1)/2
  bool quasipositive_case = false;
  std::optional<int> exact_genus;  // present iff quasipositive_case
  bool amphicheiral = false;       // q, p of opposite parity
  std::optional<TrivialFamily> trivial_family;
};

BraidParams normalize_params(int N, int q, int p);

BezoutPair bezout_coefficients(int N, int q);

// Generator exponent used inside the alpha/beta blocks:
// epsilon(i) = (-1)^floor(p_base * B * i / N), i in [1, N-1].
int epsilon_sign(const BraidParams& params, const BezoutPair& bez, int i);

// Block exponent at the k-th crossing value:
// lambda(k) = (-1)^floor(2 * A * p_base * k / q_base), k in [1, 2q_base],
// k not a multiple of q_base (there the argument is an exact integer).
int lambda_sign(const BraidParams& params, const BezoutPair& bez, int k);

// alpha = product of even-index generators, beta = of odd-index ones, each
// appearing once with exponent epsilon(i), indices ascending.  Together they
// carry N-1 letters.  For N == 2 alpha is empty.
std::pair<BraidWord, BraidWord> alpha_beta_blocks(const BraidParams& params,
                                                  const BezoutPair& bez);

// The closed-form braid for a reduced pair (d == 1): 2q blocks alternating
// alpha/beta type, block k raised to lambda(k), except blocks q and 2q which
// carry exponent +1.  Blocks q+1..2q-1 automatically invert blocks q-1..1,
// so the word is Q * alpha * Q^-1 * beta.  q(N-1) letters total.
BraidWord main_theorem_braid(const BraidParams& params);

// Braid of K(N,q,p) for arbitrary admissible parameters: the d-th power of
// the reduced base word.
BraidWord lissajous_braid(int N, int q, int p);

// Independent closed form for the p = q + N family (q odd):
// A (BA)^{(q-1)/2} (B^-1 A^-1)^{(q-1)/2} B^-1 with A/B the positive
// even/odd-index generator products.  Its closure is the unknot.
BraidWord trivial_family_braid(int N, int q);

Classification classify(int N, int q, int p);

}  // namespace lisstoric
