#include "lisstoric/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "lisstoric/invariants.hpp"
#include "lisstoric/symbolic.hpp"

namespace lisstoric {

namespace {

void require_valid(int N, int q, int p) {
  if (N < 2) throw std::domain_error("N must be at least 2, got " + std::to_string(N));
  if (q < 1 || p < 1)
    throw std::domain_error("q and p must be positive, got q=" + std::to_string(q) +
                            " p=" + std::to_string(p));
  if (std::gcd(N, q) != 1)
    throw std::domain_error("gcd(" + std::to_string(N) + "," + std::to_string(q) + ") != 1");
  if (std::gcd(N, p) != 1)
    throw std::domain_error("gcd(" + std::to_string(N) + "," + std::to_string(p) + ") != 1");
}

// candidate crossing values for one strand-pair sum s inside (eta, 1+eta]:
// t = -s/2 + N(2m+1)/(4q) over the admissible m range
void collect_values(int N, int q, int s, const Rational& eta,
                    std::set<Rational>& out) {
  // bounds for 2m+1: x = (4q/N)(t + s/2), t in (eta, 1+eta]
  Rational lo = Rational(4 * q, N) * (eta + Rational(s, 2));
  Rational hi = Rational(4 * q, N) * (eta + 1 + Rational(s, 2));
  BigInt first = floor_rational(lo) + 1;  // smallest integer > lo
  for (BigInt x = first; Rational(x) <= hi; ++x) {
    if (x % 2 == 0) continue;  // x = 2m+1 must be odd
    out.insert(Rational(-s, 2) + Rational(BigInt(N) * x, 4 * q));
  }
}

}  // namespace

std::vector<Rational> crossing_values(int N, int q, const PhaseSpec& spec) {
  if (N < 2 || q < 1 || std::gcd(N, q) != 1)
    throw std::domain_error("crossing_values: need N>=2, q>=1, gcd(N,q)=1");
  Rational eta = spec.eta;
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::set<Rational> vals;
    for (int s = 1; s <= 2 * N - 3; ++s) collect_values(N, q, s, eta, vals);
    // the value set is 1-periodic in t, so a value exactly at the closed
    // right end 1+eta implies one at eta as well; one check covers both ends
    bool collision = false;
    for (const Rational& t : vals)
      if (t - eta == 1) {
        collision = true;
        break;
      }
    if (collision) {
      eta -= Rational(1, 4 * q);
      continue;
    }
    return {vals.begin(), vals.end()};
  }
  throw std::logic_error("crossing_values: eta adjustment failed");
}

std::vector<std::pair<long long, int>> resolve_ms(const Rational& t, int N, int q) {
  std::vector<std::pair<long long, int>> out;
  for (int s = 1; s <= 2 * N - 3; ++s) {
    Rational x = (Rational(4 * q) * t + Rational(2 * q * s)) / N;
    if (!is_integer(x)) continue;
    BigInt xi = boost::multiprecision::numerator(x);
    if (xi % 2 == 0) continue;
    out.emplace_back(static_cast<long long>((xi - 1) / 2), s);
  }
  if (out.empty())
    throw std::invalid_argument("resolve_ms: " + rational_str(t) +
                                " is not a crossing value");
  if (out.size() == 1) {
    int s = out[0].second;
    if (s != N - 2 && s != N - 1 && s != N)
      throw std::logic_error("resolve_ms: lone pair with s=" + std::to_string(s));
  } else if (out.size() == 2) {
    if (out[1].second != out[0].second + N || out[1].first != out[0].first + q ||
        out[0].second > N - 3)
      throw std::logic_error("resolve_ms: inconsistent pair structure");
  } else {
    throw std::logic_error("resolve_ms: more than two pairs");
  }
  return out;
}

std::vector<CrossingEvent> crossings_at_value(const Rational& t, int N, int q,
                                              int p, const PhaseSpec& spec) {
  auto pairs = resolve_ms(t, N, q);
  std::vector<CrossingEvent> events;
  for (auto [m, s] : pairs) {
    // the strand pair is k=(s+d)/2, l=(s-d)/2 with 0 <= l < k <= N-1
    int dmax = std::min(s, 2 * N - 2 - s);
    for (int d = 2 - s % 2; d <= dmax; d += 2) {
      Rational u = Rational(BigInt(p) * m, q) + Rational(p, 2 * q) +
                   Rational(2 * p, N) * spec.phi;
      if (is_integer(u))
        throw critical_phase_error(
            "critical phase: sign argument " + rational_str(u) +
            " is an integer at m=" + std::to_string(m));
      Rational qd(BigInt(q) * d, N), pd(BigInt(p) * d, N);
      if (is_integer(qd) || is_integer(pd))
        throw std::logic_error("crossings_at_value: degenerate strand pair");
      int sign = (m % 2 == 0 ? 1 : -1) * sigma_sign(u) * sigma_sign(qd) *
                 sigma_sign(pd);
      long long r = (static_cast<long long>(q) * d) % (2LL * N);
      long long w = r < N ? r : r - 2LL * N;
      long long aw = w < 0 ? -w : w;
      int i = static_cast<int>(m % 2 == 0 ? aw : N - aw);
      CrossingEvent ev;
      ev.t = t;
      ev.m = m;
      ev.s = s;
      ev.d = d;
      ev.gen_index = i;
      ev.sign = sign;
      events.push_back(std::move(ev));
    }
  }
  std::sort(events.begin(), events.end(),
            [](const CrossingEvent& a, const CrossingEvent& b) {
              return a.gen_index < b.gen_index;
            });
  return events;
}

BraidWord enumerate_braid(int N, int q, int p, const PhaseSpec& spec) {
  require_valid(N, q, p);
  BraidWord w(N);
  for (const Rational& t : crossing_values(N, q, spec))
    for (const CrossingEvent& ev : crossings_at_value(t, N, q, p, spec))
      w.append(ev.gen_index, ev.sign);
  return w;
}

BraidWord enumerate_braid(int N, int q, int p) {
  return enumerate_braid(N, q, p, default_phase(N, q, p));
}

PhaseSpec default_phase(int N, int q, int p) {
  require_valid(N, q, p);
  PhaseSpec spec;
  spec.eta = Rational(N - 1, 4 * q);
  spec.phi = 0;
  Rational t1 = crossing_values(N, q, spec).front();
  long long m1 = resolve_ms(t1, N, q).front().first;
  // a known-degenerate phase: some crossing's sign argument is an integer
  // there; the braid is read a quarter critical-spacing away from it
  Rational inner = Rational(BigInt(p) * m1, q) + Rational(p, 2 * q);
  if (q % 2 == 1) {
    long long A = bezout_coefficients(N, q).A;
    inner -= Rational(2 * BigInt(A) * p, q);
  }
  Rational phi0 = -Rational(N, 2 * p) * inner;
  spec.phi = phi0 + Rational(N, 8LL * p * q);
  return spec;
}

std::string dump_events(const std::vector<CrossingEvent>& events) {
  std::ostringstream os;
  for (const CrossingEvent& ev : events)
    os << "t=" << rational_str(ev.t) << " m=" << ev.m << " s=" << ev.s
       << " d=" << ev.d << " i=" << ev.gen_index
       << " sign=" << (ev.sign > 0 ? "+1" : "-1") << "\n";
  return os.str();
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct StrandCurve {
  int N, q, p;
  double phi;
  double y(int k, double t) const { return std::sin(kTwoPi * q / N * (t + k)); }
  double yprime(int k, double t) const {
    return kTwoPi * q / N * std::cos(kTwoPi * q / N * (t + k));
  }
  double z(int k, double t) const {
    return std::cos(kTwoPi * p / N * (t + k + phi));
  }
};

}  // namespace

std::vector<FloatCrossing> detect_crossings_float(int N, int q, int p,
                                                  double phi, int samples) {
  require_valid(N, q, p);
  if (samples <= 0) samples = std::max(4096, 32 * q * N);
  StrandCurve c{N, q, p, phi};
  const double eta = static_cast<double>(N - 1) / (4.0 * q);
  std::vector<FloatCrossing> found;
  for (int k = 1; k < N; ++k) {
    for (int l = 0; l < k; ++l) {
      auto f = [&](double t) { return c.y(k, t) - c.y(l, t); };
      double prev_t = eta, prev_f = f(prev_t);
      for (int i = 1; i <= samples; ++i) {
        double cur_t = eta + static_cast<double>(i) / samples;
        double cur_f = f(cur_t);
        bool bracketed = (prev_f < 0.0 && cur_f > 0.0) || (prev_f > 0.0 && cur_f < 0.0);
        bool on_grid = cur_f == 0.0 && i < samples;
        if (bracketed || on_grid) {
          double a = prev_t, b = cur_t, fa = prev_f;
          if (on_grid) a = b;
          while (b - a > 1e-13) {
            double mid = 0.5 * (a + b), fm = f(mid);
            if (fm == 0.0) { a = b = mid; break; }
            if ((fa < 0.0) == (fm < 0.0)) { a = mid; fa = fm; }
            else b = mid;
          }
          double t = 0.5 * (a + b);
          double dz = c.z(k, t) - c.z(l, t);
          if (std::abs(dz) < 1e-9)
            throw critical_phase_error(
                "near-tangency: strand heights differ by " + std::to_string(dz) +
                " at t=" + std::to_string(t));
          // orientation fixed against the exact enumeration: the strand with
          // the larger height-slope product crosses in the positive sense
          double g = dz * (c.yprime(k, t) - c.yprime(l, t));
          if (g == 0.0)
            throw critical_phase_error("degenerate crossing slope at t=" +
                                       std::to_string(t));
          double ymid = 0.5 * (c.y(k, t) + c.y(l, t));
          int above = 0;
          for (int j = 0; j < N; ++j)
            if (j != k && j != l && c.y(j, t) > ymid) ++above;
          FloatCrossing fc;
          fc.t = t;
          fc.k = k;
          fc.l = l;
          fc.gen_index = 1 + above;
          fc.sign = g > 0.0 ? 1 : -1;
          fc.under = c.z(k, t) < c.z(l, t) ? k : l;
          found.push_back(fc);
        }
        prev_t = cur_t;
        prev_f = cur_f;
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const FloatCrossing& a, const FloatCrossing& b) { return a.t < b.t; });
  return found;
}

BraidWord detect_braid_float(int N, int q, int p, double phi, int samples) {
  auto found = detect_crossings_float(N, q, p, phi, samples);
  // crossings sharing one exact crossing value differ in t only by roundoff;
  // distinct values are >= 1/(2q) apart, so cluster with a quarter of that
  const double gap = 1.0 / (8.0 * q);
  BraidWord w(N);
  std::size_t i = 0;
  while (i < found.size()) {
    std::size_t j = i + 1;
    while (j < found.size() && found[j].t - found[j - 1].t < gap) ++j;
    std::sort(found.begin() + i, found.begin() + j,
              [](const FloatCrossing& a, const FloatCrossing& b) {
                return a.gen_index < b.gen_index;
              });
    for (std::size_t r = i; r < j; ++r) w.append(found[r].gen_index, found[r].sign);
    i = j;
  }
  return w;
}

const char* verdict_name(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::Equal: return "Equal";
    case CompareVerdict::MirrorEqual: return "MirrorEqual";
    case CompareVerdict::JonesEqual: return "JonesEqual";
    case CompareVerdict::JonesMirrorEqual: return "JonesMirrorEqual";
    case CompareVerdict::Distinct: return "Distinct";
  }
  return "?";
}

CompareVerdict compare_up_to_mirror(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("compare_up_to_mirror: strand counts differ");
  if (a.letters() == b.letters()) return CompareVerdict::Equal;
  if (a.letters() == mirror(b).letters()) return CompareVerdict::MirrorEqual;
  if (closure_component_count(a) != 1 || closure_component_count(b) != 1)
    return CompareVerdict::Distinct;
  LaurentPoly ja = jones_polynomial(a), jb = jones_polynomial(b);
  if (ja == jb) return CompareVerdict::JonesEqual;
  if (ja == jb.reciprocal()) return CompareVerdict::JonesMirrorEqual;
  return CompareVerdict::Distinct;
}

}  // namespace lisstoric
