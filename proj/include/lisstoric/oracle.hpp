#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lisstoric/braid.hpp"
#include "lisstoric/rational.hpp"

namespace lisstoric {

// Raised when the requested phase makes a crossing degenerate (some sign
// argument lands exactly on an integer, or the float detector sees a
// near-tangency).  Callers perturb the phase and retry.
class critical_phase_error : public std::runtime_error {
 public:
  explicit critical_phase_error(const std::string& what)
      : std::runtime_error(what) {}
};

// One crossing of the strand diagram, resolved exactly.
struct CrossingEvent {
  Rational t;     // crossing value, t = -s/2 + N(2m+1)/(4q)
  long long m;
  int s;          // k+l of the strand pair
  int d;          // k-l of the strand pair, in [1, N-1]
  int gen_index;  // position index i of the crossing, in [1, N-1]
  int sign;       // +1 over / -1 under, per the exact sign formula
};

struct PhaseSpec {
  Rational phi;  // phase of the second coordinate
  Rational eta;  // left end of the parameter window [eta, 1+eta]
};

// Non-critical phase and endpoint-safe window for (N,q,p): eta sits exactly
// between two adjacent crossing values, phi is offset N/(8pq) from a critical
// phase (critical phases are spaced by multiples of N*gcd(q,p)/(2pq)).
PhaseSpec default_phase(int N, int q, int p);

// The 2q crossing values inside (eta, 1+eta], ascending, spaced exactly
// 1/(2q).  A caller-supplied eta colliding with the value lattice is shifted
// down by 1/(4q).
std::vector<Rational> crossing_values(int N, int q, const PhaseSpec& spec);

// The one or two (m, s) pairs of a crossing value.  Single pair: s is one of
// N-2, N-1, N.  Two pairs: they differ by (+q, +N) and the smaller s <= N-3.
std::vector<std::pair<long long, int>> resolve_ms(const Rational& t, int N, int q);

// All crossings above one crossing value, sorted by ascending gen_index.
// They share index parity and commute (disjoint positions).
std::vector<CrossingEvent> crossings_at_value(const Rational& t, int N, int q,
                                              int p, const PhaseSpec& spec);

// Exact enumeration of the full braid word: concatenation over ascending
// crossing values.  Works for raw (not necessarily coprime) q, p; always
// q(N-1) letters.
BraidWord enumerate_braid(int N, int q, int p, const PhaseSpec& spec);
BraidWord enumerate_braid(int N, int q, int p);  // at default_phase

// One crossing found by the floating-point detector.
struct FloatCrossing {
  double t;
  int k, l;       // strand labels (k > l), 0-based
  int gen_index;  // 1 + number of strands above the meeting point
  int sign;
  int under;      // which of k,l passes under
};

// Samples the N strand graphs, locates sign changes of the first-coordinate
// differences, bisects each root to 1e-12 and reads the crossing sign off the
// second coordinates.  Shares no formula with the exact enumeration beyond
// the curve definition itself.  samples <= 0 picks a safe default.
std::vector<FloatCrossing> detect_crossings_float(int N, int q, int p,
                                                  double phi, int samples = 0);
BraidWord detect_braid_float(int N, int q, int p, double phi, int samples = 0);

// Stable diagnostic text: one line per event,
// "t=<num>/<den> m=<m> s=<s> d=<d> i=<i> sign=<+1|-1>", sorted by (t, i).
std::string dump_events(const std::vector<CrossingEvent>& events);

enum class CompareVerdict {
  Equal,             // identical letter sequences
  MirrorEqual,       // identical after negating every sign of b
  JonesEqual,        // Jones polynomials of the closures agree
  JonesMirrorEqual,  // Jones polynomials agree after t -> 1/t
  Distinct
};

const char* verdict_name(CompareVerdict v);

// Letter-level comparison first, then Jones comparison of the knot closures.
// Requires equal strand counts.
CompareVerdict compare_up_to_mirror(const BraidWord& a, const BraidWord& b);

}  // namespace lisstoric
