#pragma once

#include <cmath>

#include "bfmle/errors.hpp"
#include "bfmle/specialfn.hpp"

namespace bfmle {

// Finite-sample upper bound on P(three stationary points) under equal means.
// The region D > 0 lies inside {|delta_hat| > c_n}, where c_n is the cusp
// ordinate, and a rescaled delta_hat is Student-t with m - 1 degrees of
// freedom, which turns the inclusion into a t tail probability.
struct BoundResult {
  double c_n = 0.0;
  double t_threshold = 0.0;
  double bound = 1.0;
};

// `r` is the sample-size ratio n/m and `m` the second sample size; gamma is
// the population ratio sd_x / sd_y.
inline BoundResult multimodality_bound_from_ratio(double r, int m, double gamma) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("r must be positive");
  if (m < 2) throw DomainError("m must be at least 2");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
  const double rp2 = (r + 2.0) * (r + 2.0);
  BoundResult out;
  out.c_n = 3.0 * (1.0 + r) * std::sqrt(3.0 * (r + 2.0) * r) / rp2;
  out.t_threshold = std::sqrt(m - 1.0) * 3.0 * (1.0 + r) * r * std::sqrt(3.0 * (r + 2.0)) /
                    (rp2 * std::sqrt(gamma * gamma + r));
  out.bound = t_two_sided_tail(out.t_threshold, m - 1.0).value;
  return out;
}

inline BoundResult multimodality_bound(int n, int m, double gamma) {
  if (n < 2 || m < 2) throw DomainError("n and m must be at least 2");
  return multimodality_bound_from_ratio(static_cast<double>(n) / m, m, gamma);
}

}  // namespace bfmle
