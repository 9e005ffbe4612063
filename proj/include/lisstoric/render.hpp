#pragma once

#include <string>

namespace lisstoric {

// CSV "t,x,y,z" of the space curve
//   x = (2+sin(qt))cos(Nt), y = (2+sin(qt))sin(Nt), z = cos(p(t+phi))
// sampled uniformly on [0, 2pi] inclusive (samples+1 rows; the first and
// last coincide).
std::string space_curve_csv(int N, int q, int p, double phi, int samples);

// SVG of the braid diagram: the N strand graphs over one parameter window,
// with a gap in the under-strand at every crossing and the over-strand
// re-drawn locally (marked class="crossing", one marker per crossing).
std::string braid_svg(int N, int q, int p, double phi,
                      int samples_per_strand = 600);

}  // namespace lisstoric
