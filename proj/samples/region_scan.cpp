// Prints, for r = 4, the gamma values on a grid where the unimodal deltas do
// not form an interval (three curve points above gamma).
#include <cstdio>

#include "bfmle/bfmle.hpp"

int main() {
  const double r = 4.0;
  const auto c = bfmle::cusps(r);
  std::printf("cusp (%.6f, %.6f), asymptote slope %.6f\n", c.gamma_c, c.delta_c, bfmle::asymptote_slope(r));
  for (double g = 0.5; g <= 6.0; g += 0.05) {
    const auto ds = bfmle::curve_delta_at(g, r);
    if (ds.size() == 3) std::printf("gamma %.2f: delta %.5f %.5f %.5f\n", g, ds[0], ds[1], ds[2]);
  }
  return 0;
}
