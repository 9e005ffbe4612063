#include "lisstoric/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "lisstoric/oracle.hpp"

namespace lisstoric {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

std::string space_curve_csv(int N, int q, int p, double phi, int samples) {
  if (samples < 2) throw std::invalid_argument("space_curve_csv: samples must be >= 2");
  std::ostringstream os;
  os << "t,x,y,z\n";
  for (int i = 0; i <= samples; ++i) {
    double t = 2.0 * kPi * i / samples;
    double radius = 2.0 + std::sin(q * t);
    double x = radius * std::cos(N * t);
    double y = radius * std::sin(N * t);
    double z = std::cos(p * (t + phi));
    os << fmt(t) << ',' << fmt(x) << ',' << fmt(y) << ',' << fmt(z) << '\n';
  }
  return os.str();
}

std::string braid_svg(int N, int q, int p, double phi, int samples_per_strand) {
  auto crossings = detect_crossings_float(N, q, p, phi);
  const double width = 800.0, height = 400.0, margin = 40.0;
  const double eta = static_cast<double>(N - 1) / (4.0 * q);
  const double half_gap = std::min(0.012, 1.0 / (16.0 * q));
  auto X = [&](double t) { return margin + (t - eta) * (width - 2 * margin); };
  // svg y grows downward; strand height sin(...) in [-1,1] is flipped
  auto Y = [&](double y) { return margin + (1.0 - y) / 2.0 * (height - 2 * margin); };
  auto strand_y = [&](int k, double t) {
    return std::sin(2.0 * kPi * q / N * (t + k));
  };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int k = 0; k < N; ++k) {
    // split this strand's graph at every crossing where it passes under
    std::vector<std::pair<double, double>> spans;
    spans.emplace_back(eta, eta + 1.0);
    for (const FloatCrossing& c : crossings) {
      if (c.under != k || (c.k != k && c.l != k)) continue;
      std::vector<std::pair<double, double>> cut;
      for (auto [a, b] : spans) {
        double lo = c.t - half_gap, hi = c.t + half_gap;
        if (hi <= a || lo >= b) {
          cut.emplace_back(a, b);
          continue;
        }
        if (lo > a) cut.emplace_back(a, lo);
        if (hi < b) cut.emplace_back(hi, b);
      }
      spans = std::move(cut);
    }
    const char* color = palette[k % 8];
    for (auto [a, b] : spans) {
      int steps = std::max(2, static_cast<int>(samples_per_strand * (b - a)));
      os << "<polyline fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"2\" points=\"";
      for (int i = 0; i <= steps; ++i) {
        double t = a + (b - a) * i / steps;
        if (i) os << ' ';
        os << fmt(X(t), "%.2f") << ',' << fmt(Y(strand_y(k, t)), "%.2f");
      }
      os << "\"/>\n";
    }
  }
  // redraw each over-strand across its crossing so it visibly passes on top
  for (const FloatCrossing& c : crossings) {
    int over = c.under == c.k ? c.l : c.k;
    os << "<polyline class=\"crossing\" fill=\"none\" stroke=\""
       << palette[over % 8] << "\" stroke-width=\"2\" points=\"";
    const int steps = 8;
    for (int i = 0; i <= steps; ++i) {
      double t = c.t - half_gap + 2.0 * half_gap * i / steps;
      t = std::clamp(t, eta, eta + 1.0);
      if (i) os << ' ';
      os << fmt(X(t), "%.2f") << ',' << fmt(Y(strand_y(over, t)), "%.2f");
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lisstoric
