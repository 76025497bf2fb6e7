#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bfmle/cubic.hpp"
#include "bfmle/stats.hpp"

namespace bfmle {

// Parameters of the common-mean model: one mean, two variances.
struct NullParams {
  double mu = 0.0;
  double var_x = 1.0;
  double var_y = 1.0;
};

enum class PointKind { LocalMax, Saddle };

struct StationaryPoint {
  NullParams params;
  double loglik = 0.0;
  PointKind kind = PointKind::LocalMax;
};

struct NullFit {
  StationaryPoint mle;
  std::vector<StationaryPoint> all_points;  // ascending in mu
  bool multimodal = false;
  double discriminant = 0.0;
  bool degenerate = false;  // |discriminant| fell inside the solver tolerance
};

// Unrestricted fit: separate means and variances.
struct AltFit {
  double mu_x = 0.0;
  double mu_y = 0.0;
  double var_x = 1.0;
  double var_y = 1.0;
  double loglik = 0.0;
};

// Cubic in mu obtained by substituting the profiled variances into the
// mean score equation.
inline Cubic cubic_coefficients(const SummaryStats& s) {
  validate(s);
  const double r = s.ratio();
  const double x = s.mean_x, y = s.mean_y;
  const double vx = s.var_x, vy = s.var_y;
  return {
      1.0 + r,
      -(2.0 * x + y) - r * (2.0 * y + x),
      x * x + 2.0 * (1.0 + r) * x * y + r * y * y + vx + r * vy,
      -x * x * y - r * y * y * x - vx * y - r * vy * x,
  };
}

struct ProfiledVariances {
  double var_x;
  double var_y;
};

// Variance maximizers of the log-likelihood for a fixed common mean.
inline ProfiledVariances profile_variances(const SummaryStats& s, double mu) {
  const double dx = s.mean_x - mu;
  const double dy = s.mean_y - mu;
  return {dx * dx + s.var_x, dy * dy + s.var_y};
}

inline double loglik(const SummaryStats& s, const NullParams& p) {
  if (!(p.var_x > 0.0) || !(p.var_y > 0.0)) throw DomainError("model variances must be positive");
  const double n = s.n, m = s.m;
  const double dx = s.mean_x - p.mu;
  const double dy = s.mean_y - p.mu;
  return -0.5 * (n + m) * std::log(2.0 * std::numbers::pi) - 0.5 * n * std::log(p.var_x) -
         0.5 * m * std::log(p.var_y) - 0.5 * n * ((s.var_x + dx * dx) / p.var_x) -
         0.5 * m * ((s.var_y + dy * dy) / p.var_y);
}

inline double profile_loglik(const SummaryStats& s, double mu) {
  const auto v = profile_variances(s, mu);
  return loglik(s, {mu, v.var_x, v.var_y});
}

namespace detail {

inline std::vector<StationaryPoint> points_from_roots(const SummaryStats& s, const RootSet& rs) {
  std::vector<StationaryPoint> pts;
  pts.reserve(rs.roots.size());
  for (double mu : rs.roots) {
    const auto v = profile_variances(s, mu);
    const NullParams p{mu, v.var_x, v.var_y};
    pts.push_back({p, loglik(s, p), PointKind::LocalMax});
  }
  // The cubic has a positive leading coefficient and the mean score is
  // proportional to -f(mu), so the outer roots are maxima. A merged double
  // root is a point of inflection of the profile and is not a maximum.
  if (pts.size() == 3) {
    pts[1].kind = PointKind::Saddle;
  } else if (pts.size() == 2) {
    const Cubic f = cubic_coefficients(s);
    const std::size_t dbl = std::abs(f.derivative(pts[0].params.mu)) < std::abs(f.derivative(pts[1].params.mu)) ? 0 : 1;
    pts[dbl].kind = PointKind::Saddle;
  }
  return pts;
}

}  // namespace detail

inline std::vector<StationaryPoint> stationary_points(const SummaryStats& s) {
  return detail::points_from_roots(s, solve_cubic(cubic_coefficients(s)));
}

// Log-likelihood values this close are treated as a tie, broken toward the
// smaller mu.
inline bool loglik_tie(double a, double b) {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b));
}

inline NullFit fit_null(const SummaryStats& s) {
  const RootSet rs = solve_cubic(cubic_coefficients(s));
  NullFit fit;
  fit.all_points = detail::points_from_roots(s, rs);
  fit.discriminant = rs.discriminant;
  fit.degenerate = rs.degenerate;
  fit.multimodal = fit.all_points.size() == 3;
  fit.mle = fit.all_points.front();
  for (const auto& p : fit.all_points) {
    if (p.loglik > fit.mle.loglik && !loglik_tie(p.loglik, fit.mle.loglik)) fit.mle = p;
  }
  return fit;
}

inline AltFit fit_alternative(const SummaryStats& s) {
  validate(s);
  const double n = s.n, m = s.m;
  const double ll = -0.5 * (n + m) * std::log(2.0 * std::numbers::pi) - 0.5 * n * std::log(s.var_x) -
                    0.5 * m * std::log(s.var_y) - 0.5 * (n + m);
  return {s.mean_x, s.mean_y, s.var_x, s.var_y, ll};
}

// 2 * (unrestricted maximum - null maximum), floored at zero to absorb
// rounding when the two maxima coincide.
inline double lrt_statistic(const SummaryStats& s) {
  return std::max(0.0, 2.0 * (fit_alternative(s).loglik - fit_null(s).mle.loglik));
}

}  // namespace bfmle
