#include "lisstoric/symbolic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "lisstoric/rational.hpp"

namespace lisstoric {

const char* trivial_family_name(TrivialFamily f) {
  switch (f) {
    case TrivialFamily::QPlusN: return "q+N";
    case TrivialFamily::POne: return "p=1";
    case TrivialFamily::TwoNqPlusOne: return "2Nq+1";
    case TrivialFamily::TwoNqMinusOne: return "2Nq-1";
  }
  return "?";
}

BraidParams normalize_params(int N, int q, int p) {
  if (N < 2) throw std::domain_error("N must be at least 2, got " + std::to_string(N));
  if (q < 1 || p < 1)
    throw std::domain_error("q and p must be positive, got q=" + std::to_string(q) +
                            " p=" + std::to_string(p));
  if (std::gcd(N, q) != 1)
    throw std::domain_error("gcd(" + std::to_string(N) + "," + std::to_string(q) + ") != 1");
  if (std::gcd(N, p) != 1)
    throw std::domain_error("gcd(" + std::to_string(N) + "," + std::to_string(p) + ") != 1");
  BraidParams r;
  r.N = N;
  r.q = q;
  r.p = p;
  r.d = std::gcd(q, p);
  r.q_base = q / r.d;
  r.p_base = p / r.d;
  r.swapped = r.q_base % 2 == 0;
  if (r.swapped) std::swap(r.q_base, r.p_base);
  return r;
}

BezoutPair bezout_coefficients(int N, int q) {
  if (q < 1 || std::gcd(2 * N, q) != 1)
    throw std::domain_error("bezout_coefficients: gcd(2*" + std::to_string(N) + "," +
                            std::to_string(q) + ") != 1");
  // extended Euclid on (2N, q): find x,y with 2N*x + q*y == gcd == 1
  long long a = 2LL * N, b = q;
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long long t = a / b;
    long long a2 = b, b2 = a - t * b;
    long long x2 = x0 - t * x1, y2 = y0 - t * y1;
    a = a2; b = b2;
    x0 = x1; y0 = y1;
    x1 = x2; y1 = y2;
  }
  // a == 1 here; general solution shifts B by multiples of 2N
  long long twoN = 2LL * N;
  long long B = ((y0 % twoN) + twoN) % twoN;  // in [0, 2N)
  if (B > N) B -= twoN;                       // minimal |B|; tie B==N stays +N
  long long A = (1 - B * q) / twoN;
  return {A, B};
}

int epsilon_sign(const BraidParams& params, const BezoutPair& bez, int i) {
  if (i < 1 || i > params.N - 1)
    throw std::invalid_argument("epsilon_sign: i=" + std::to_string(i) +
                                " outside [1," + std::to_string(params.N - 1) + "]");
  long long num = static_cast<long long>(params.p_base) * bez.B * i;
  return floor_div(num, params.N) % 2 == 0 ? 1 : -1;
}

int lambda_sign(const BraidParams& params, const BezoutPair& bez, int k) {
  const int q = params.q_base;
  if (k < 1 || k > 2 * q)
    throw std::invalid_argument("lambda_sign: k=" + std::to_string(k) +
                                " outside [1," + std::to_string(2 * q) + "]");
  if (k % q == 0)
    throw std::domain_error("lambda_sign: undefined at k=" + std::to_string(k) +
                            " (multiple of " + std::to_string(q) + ")");
  long long num = 2LL * bez.A * params.p_base * k;
  return floor_div(num, q) % 2 == 0 ? 1 : -1;
}

std::pair<BraidWord, BraidWord> alpha_beta_blocks(const BraidParams& params,
                                                  const BezoutPair& bez) {
  BraidWord alpha(params.N), beta(params.N);
  for (int i = 1; i <= params.N - 1; ++i) {
    int e = epsilon_sign(params, bez, i);
    (i % 2 == 0 ? alpha : beta).append(i, e);
  }
  return {std::move(alpha), std::move(beta)};
}

// append block^e keeping the ascending generator order (letters inside a
// block have indices of one parity, hence commute)
static void append_power(BraidWord& w, const BraidWord& block, int e) {
  for (const BraidLetter& l : block.letters()) w.append(l.index, e * l.sign);
}

BraidWord main_theorem_braid(const BraidParams& params) {
  if (params.d != 1)
    throw std::domain_error("main_theorem_braid: requires gcd(q,p)=1, got d=" +
                            std::to_string(params.d));
  const int q = params.q_base;
  BezoutPair bez = bezout_coefficients(params.N, q);
  auto [alpha, beta] = alpha_beta_blocks(params, bez);
  BraidWord w(params.N);
  for (int k = 1; k <= 2 * q; ++k) {
    const BraidWord& block = k % 2 == 1 ? alpha : beta;
    int e = k % q == 0 ? 1 : lambda_sign(params, bez, k);
    append_power(w, block, e);
  }
  return w;
}

BraidWord lissajous_braid(int N, int q, int p) {
  BraidParams raw = normalize_params(N, q, p);
  BraidParams base = normalize_params(N, raw.q_base, raw.p_base);
  return power(main_theorem_braid(base), raw.d);
}

BraidWord trivial_family_braid(int N, int q) {
  if (q % 2 == 0)
    throw std::domain_error("trivial_family_braid: q must be odd, got " + std::to_string(q));
  if (N < 2 || q < 1 || std::gcd(N, q) != 1)
    throw std::domain_error("trivial_family_braid: need N>=2, q>=1, gcd(N,q)=1");
  BraidWord even(N), odd(N);
  for (int i = 1; i <= N - 1; ++i) (i % 2 == 0 ? even : odd).append(i, 1);
  BraidWord w(N);
  append_power(w, even, 1);
  for (int j = 0; j < (q - 1) / 2; ++j) {
    append_power(w, odd, 1);
    append_power(w, even, 1);
  }
  for (int j = 0; j < (q - 1) / 2; ++j) {
    append_power(w, odd, -1);
    append_power(w, even, -1);
  }
  append_power(w, odd, -1);
  return w;
}

// does b lie in the residue family b ≡ target (mod 2*N*a)?
static bool in_family(int N, int a, long long b, long long target) {
  long long m = 2LL * N * a;
  long long t = ((target % m) + m) % m;
  return ((b % m) + m) % m == t;
}

Classification classify(int N, int q, int p) {
  BraidParams params = normalize_params(N, q, p);
  Classification c;
  c.d = params.d;
  c.ribbon = params.d == 1;
  c.periodic_d = params.d;
  c.genus_bound = (N - 1) * (params.d - 1) / 2;
  long long sum = params.q_base + params.p_base;
  long long diff = params.q_base - params.p_base;
  c.quasipositive_case = sum % (2 * N) == 0 || diff % (2 * N) == 0;
  if (c.quasipositive_case) c.exact_genus = c.genus_bound;
  c.amphicheiral = (q % 2) != (p % 2);
  if (q == 1 || p == 1) {
    c.trivial_family = TrivialFamily::POne;
  } else {
    for (auto [a, b] : {std::pair{q, p}, std::pair{p, q}}) {
      if (in_family(N, a, b, a + N) || in_family(N, a, b, -(a + N))) {
        c.trivial_family = TrivialFamily::QPlusN;
        break;
      }
    }
    if (!c.trivial_family) {
      for (auto [a, b] : {std::pair{q, p}, std::pair{p, q}}) {
        if (in_family(N, a, b, 1)) {
          c.trivial_family = TrivialFamily::TwoNqPlusOne;
          break;
        }
        if (in_family(N, a, b, -1)) {
          c.trivial_family = TrivialFamily::TwoNqMinusOne;
          break;
        }
      }
    }
  }
  return c;
}

}  // namespace lisstoric
