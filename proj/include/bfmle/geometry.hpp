#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "bfmle/cubic.hpp"
#include "bfmle/errors.hpp"

// The region polynomial D_r(gamma, delta). The likelihood cubic's
// discriminant factors as var_y^3 * D_r(gamma_hat, delta_hat), so the sign of
// D decides between one and three stationary points. The zero set of D_r is
// a plane curve with four cusps and two asymptotes.
namespace bfmle {

enum class Region { OneRoot, ThreeRoots, BoundaryNonsingular, BoundaryCusp };

struct RegionPoint {
  double gamma = 0.0;
  double delta = 0.0;
  double r = 0.0;
  double d_value = 0.0;
  Region region = Region::OneRoot;
};

struct Point2 {
  double gamma;
  double delta;
};

// Cusps at (+-gamma_c, +-delta_c).
struct CuspSet {
  double gamma_c = 0.0;
  double delta_c = 0.0;

  std::array<Point2, 4> points() const {
    return {{{gamma_c, delta_c}, {gamma_c, -delta_c}, {-gamma_c, delta_c}, {-gamma_c, -delta_c}}};
  }
};

enum class LimitCase { InteriorOne, InteriorThree, CurveNonsingular, CurveCusp };

struct AsymptoticPrediction {
  double limit_prob_three_roots = 0.0;
  LimitCase limit_case = LimitCase::InteriorOne;
};

struct Gradient2 {
  double d_gamma;
  double d_delta;

  double norm() const { return std::hypot(d_gamma, d_delta); }
};

namespace detail {

inline void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive and finite");
}

// Coefficients of D in its power expansion. Writing g = gamma^2 and u = delta^2:
//   D = r^2 u^3 - 2u^2 (g A + B) - u (g^2 C + E - 2 g F) - 4 (1 + r)(r + g)^3
struct DCoefs {
  double r2, A, B, C, E, F;
};

inline DCoefs d_coefs(double r) {
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r;
  return {r2,
          2.0 + 2.0 * r - r2,
          2.0 * r3 + 2.0 * r4 - r2,
          8.0 + 8.0 * r - r2,
          8.0 * r4 + 8.0 * r3 - r2,
          10.0 * r + 19.0 * r2 + 10.0 * r3};
}

// max(1, gamma, |delta|, r)^6: D is homogeneous of degree 6 in (gamma, delta)
// for fixed r.
inline double d_scale(double gamma, double delta, double r) {
  const double s = std::max({1.0, std::abs(gamma), std::abs(delta), r});
  const double s3 = s * s * s;
  return s3 * s3;
}

}  // namespace detail

inline double big_d(double gamma, double delta, double r) {
  detail::require_positive(r, "r");
  const auto k = detail::d_coefs(r);
  const double g2 = gamma * gamma;
  const double u = delta * delta;
  const double rg = r + g2;
  return u * u * u * k.r2 - 2.0 * u * u * (g2 * k.A + k.B) - u * (g2 * g2 * k.C + k.E - 2.0 * g2 * k.F) -
         4.0 * (1.0 + r) * rg * rg * rg;
}

inline Gradient2 big_d_gradient(double gamma, double delta, double r) {
  detail::require_positive(r, "r");
  const auto k = detail::d_coefs(r);
  const double g2 = gamma * gamma;
  const double u = delta * delta;
  const double rg = r + g2;
  const double d_gamma = -4.0 * u * u * gamma * k.A - u * (4.0 * g2 * gamma * k.C - 4.0 * gamma * k.F) -
                         24.0 * (1.0 + r) * rg * rg * gamma;
  const double d_delta = 6.0 * k.r2 * u * u * delta - 8.0 * u * delta * (g2 * k.A + k.B) -
                         2.0 * delta * (g2 * g2 * k.C + k.E - 2.0 * g2 * k.F);
  return {d_gamma, d_delta};
}

inline CuspSet cusps(double r) {
  detail::require_positive(r, "r");
  const double rp2 = (r + 2.0) * (r + 2.0);
  return {(2.0 * r + 1.0) * std::sqrt((r + 2.0) * r * (2.0 * r + 1.0)) / rp2,
          3.0 * (1.0 + r) * std::sqrt(3.0 * (r + 2.0) * r) / rp2};
}

// |delta/gamma| of the asymptote pair r*delta = +-2*sqrt(1 + r)*gamma.
inline double asymptote_slope(double r) {
  detail::require_positive(r, "r");
  return 2.0 * std::sqrt(1.0 + r) / r;
}

// The cubic in u = delta^2 whose roots give the curve points above gamma.
inline Cubic d_as_cubic_in_u(double gamma, double r) {
  const auto k = detail::d_coefs(r);
  const double g2 = gamma * gamma;
  const double rg = r + g2;
  return {k.r2, -2.0 * (g2 * k.A + k.B), -(g2 * g2 * k.C + k.E - 2.0 * g2 * k.F), -4.0 * (1.0 + r) * rg * rg * rg};
}

// All delta >= 0 with D_r(gamma, delta) = 0, ascending. Never empty: D < 0 at
// delta = 0 and D grows like r^2 delta^6.
inline std::vector<double> curve_delta_at(double gamma, double r) {
  detail::require_positive(gamma, "gamma");
  detail::require_positive(r, "r");
  const RootSet rs = solve_cubic(d_as_cubic_in_u(gamma, r));
  std::vector<double> out;
  for (double u : rs.roots) {
    if (u > 0.0) out.push_back(std::sqrt(u));
  }
  return out;
}

// Boundary points on a uniform gamma grid, both signs of delta, in grid order.
inline std::vector<Point2> trace_curve(double r, double gamma_min, double gamma_max, int steps) {
  detail::require_positive(gamma_min, "gamma_min");
  if (!(gamma_max > gamma_min)) throw DomainError("gamma_max must exceed gamma_min");
  if (steps < 2) throw DomainError("steps must be at least 2");
  std::vector<Point2> pts;
  for (int i = 0; i < steps; ++i) {
    const double g = i == steps - 1 ? gamma_max : gamma_min + (gamma_max - gamma_min) * i / (steps - 1);
    for (double d : curve_delta_at(g, r)) {
      pts.push_back({g, d});
      pts.push_back({g, -d});
    }
  }
  return pts;
}

// Tolerance on |D| below which a point is taken to lie on the curve.
inline double boundary_tolerance(double gamma, double delta, double r) {
  return 1e-9 * detail::d_scale(gamma, delta, r);
}

inline double cusp_gradient_tolerance(double gamma, double delta, double r) {
  return 1e-6 * detail::d_scale(gamma, delta, r);
}

inline constexpr double kDefaultCuspTol = 1e-6;

// `cusp_tol` bounds the coordinate distance between (gamma, |delta|) and the
// upper cusp for the point to count as singular.
inline RegionPoint classify_point(double gamma, double delta, double r, double cusp_tol = kDefaultCuspTol) {
  detail::require_positive(gamma, "gamma");
  RegionPoint pt{gamma, delta, r, big_d(gamma, delta, r), Region::OneRoot};
  const double tau = boundary_tolerance(gamma, delta, r);
  if (pt.d_value > tau) {
    pt.region = Region::ThreeRoots;
  } else if (pt.d_value >= -tau) {
    const CuspSet c = cusps(r);
    const bool near_cusp = std::hypot(gamma - c.gamma_c, std::abs(delta) - c.delta_c) <= cusp_tol;
    const bool flat = big_d_gradient(gamma, delta, r).norm() <= cusp_gradient_tolerance(gamma, delta, r);
    pt.region = near_cusp && flat ? Region::BoundaryCusp : Region::BoundaryNonsingular;
  }
  return pt;
}

// Large-sample limit of P(three stationary points) when the population
// (gamma, delta) sits at the given point: 0 or 1 off the curve, 1/2 on a
// smooth part of the curve and 0 at a cusp.
inline AsymptoticPrediction asymptotic_prediction(double gamma, double delta, double r,
                                                  double cusp_tol = kDefaultCuspTol) {
  switch (classify_point(gamma, delta, r, cusp_tol).region) {
    case Region::OneRoot:
      return {0.0, LimitCase::InteriorOne};
    case Region::ThreeRoots:
      return {1.0, LimitCase::InteriorThree};
    case Region::BoundaryNonsingular:
      return {0.5, LimitCase::CurveNonsingular};
    case Region::BoundaryCusp:
      break;
  }
  return {0.0, LimitCase::CurveCusp};
}

// Unit direction of the tangent half-ray of the curve at the upper cusp with
// gamma > 0: proportional to (r - 1, sqrt(3(2r + 1))).
inline Point2 cusp_tangent_ray(double r) {
  detail::require_positive(r, "r");
  const double dg = r - 1.0;
  const double dd = std::sqrt(3.0 * (2.0 * r + 1.0));
  const double len = std::hypot(dg, dd);
  return {dg / len, dd / len};
}

inline const char* to_string(Region r) {
  switch (r) {
    case Region::OneRoot: return "OneRoot";
    case Region::ThreeRoots: return "ThreeRoots";
    case Region::BoundaryNonsingular: return "BoundaryNonsingular";
    case Region::BoundaryCusp: return "BoundaryCusp";
  }
  return "?";
}

inline const char* to_string(LimitCase c) {
  switch (c) {
    case LimitCase::InteriorOne: return "InteriorOne";
    case LimitCase::InteriorThree: return "InteriorThree";
    case LimitCase::CurveNonsingular: return "CurveNonsingular";
    case LimitCase::CurveCusp: return "CurveCusp";
  }
  return "?";
}

}  // namespace bfmle
