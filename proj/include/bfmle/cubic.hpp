#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bfmle/errors.hpp"

namespace bfmle {

inline constexpr double kDefaultDegenerateTol = 1e-12;

// Real cubic a3*x^3 + a2*x^2 + a1*x + a0.
struct Cubic {
  double a3 = 0.0;
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;

  double operator()(double x) const { return ((a3 * x + a2) * x + a1) * x + a0; }
  double derivative(double x) const { return (3.0 * a3 * x + 2.0 * a2) * x + a1; }

  // Largest coefficient magnitude.
  double scale() const {
    return std::max({std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0)});
  }
};

enum class RootCount { One, Three, Degenerate };

struct RootSet {
  std::vector<double> roots;  // distinct, ascending
  double discriminant = 0.0;
  bool degenerate = false;
};

namespace detail {

// Double-double value hi + lo, used to evaluate the discriminant without
// losing the cancellation between its five terms.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_mul(DD x, DD y) {
  DD p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD x, double y) { return dd_mul(x, DD{y, 0.0}); }

inline DD dd_add(DD x, DD y) {
  DD s = two_sum(x.hi, y.hi);
  const DD t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

}  // namespace detail

// a1^2 a2^2 - 4 a0 a2^3 - 4 a1^3 a3 + 18 a0 a1 a2 a3 - 27 a0^2 a3^2, with the
// products and the sum carried in double-double.
inline double discriminant(const Cubic& c) {
  using detail::DD;
  using detail::dd_add;
  using detail::dd_mul;
  using detail::two_prod;
  const double a3 = c.a3, a2 = c.a2, a1 = c.a1, a0 = c.a0;
  const DD a1a2 = two_prod(a1, a2);
  const DD a2a2 = two_prod(a2, a2);
  const DD a1a1 = two_prod(a1, a1);
  const DD a0a3 = two_prod(a0, a3);
  DD sum = dd_mul(a1a2, a1a2);
  sum = dd_add(sum, dd_mul(dd_mul(a2a2, a2), -4.0 * a0));
  sum = dd_add(sum, dd_mul(dd_mul(a1a1, a1), -4.0 * a3));
  sum = dd_add(sum, dd_mul(dd_mul(a0a3, a1a2), 18.0));
  sum = dd_add(sum, dd_mul(dd_mul(a0a3, a0a3), -27.0));
  return sum.hi + sum.lo;
}

// Residual bound a returned root x satisfies: |f(x)| <= residual_bound(c, x).
inline double residual_bound(const Cubic& c, double x) {
  const double w = 1.0 + std::abs(x);
  return 1e-10 * c.scale() * w * w * w;
}

namespace detail {

inline void require_cubic(const Cubic& c) {
  if (c.a3 == 0.0 || !std::isfinite(c.a3)) throw NotCubic("leading coefficient a3 must be nonzero");
}

inline double degenerate_threshold(const Cubic& c, double tol) {
  const double s = c.scale();
  return tol * s * s;
}

// One Newton step against the original coefficients, kept only if it helps.
inline double polish(const Cubic& c, double x) {
  const double fx = c(x);
  const double dfx = c.derivative(x);
  if (fx == 0.0 || dfx == 0.0) return x;
  const double y = x - fx / dfx;
  return std::isfinite(y) && std::abs(c(y)) < std::abs(fx) ? y : x;
}

// Coefficients of the depressed monic cubic t^3 + p t + q, with x = t - shift.
struct Depressed {
  double shift;
  double p;
  double q;
};

inline Depressed depress(const Cubic& c) {
  const double b = c.a2 / c.a3;
  const double cc = c.a1 / c.a3;
  const double d = c.a0 / c.a3;
  return {b / 3.0, cc - b * b / 3.0, (2.0 * b * b / 27.0 - cc / 3.0) * b + d};
}

inline std::vector<double> three_roots_trig(const Depressed& dep) {
  const double m = 2.0 * std::sqrt(-dep.p / 3.0);
  const double arg = std::clamp(3.0 * dep.q / (dep.p * m), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
  return {m * std::cos(theta) - dep.shift, m * std::cos(theta - third_turn) - dep.shift,
          m * std::cos(theta - 2.0 * third_turn) - dep.shift};
}

// Cardano with the resolvent root chosen so the two terms add in magnitude.
inline double one_root_cardano(const Depressed& dep) {
  const double disc = std::max(0.0, dep.q * dep.q / 4.0 + dep.p * dep.p * dep.p / 27.0);
  const double sign_q = dep.q < 0.0 ? -1.0 : 1.0;
  const double a = std::cbrt(-dep.q / 2.0 - sign_q * std::sqrt(disc));
  const double b = a == 0.0 ? 0.0 : -dep.p / (3.0 * a);
  return a + b - dep.shift;
}

// Zero discriminant: a double root plus a simple root, or a triple root.
inline std::vector<double> repeated_roots(const Depressed& dep, double coef_scale) {
  if (std::abs(dep.p) <= 1e-7 * coef_scale) return {-dep.shift};
  return {-1.5 * dep.q / dep.p - dep.shift, 3.0 * dep.q / dep.p - dep.shift};
}

inline void sort_and_merge(std::vector<double>& roots) {
  std::sort(roots.begin(), roots.end());
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-7 * (1.0 + std::abs(a) + std::abs(b)); };
  roots.erase(std::unique(roots.begin(), roots.end(), close), roots.end());
}

}  // namespace detail

inline RootCount count_real_roots(const Cubic& c, double tol_degenerate = kDefaultDegenerateTol) {
  detail::require_cubic(c);
  const double delta = discriminant(c);
  const double tau = detail::degenerate_threshold(c, tol_degenerate);
  if (delta > tau) return RootCount::Three;
  if (delta < -tau) return RootCount::One;
  return RootCount::Degenerate;
}

// All distinct real roots. The count follows the sign of the discriminant
// unless |discriminant| <= tol_degenerate * scale^2, in which case the
// `degenerate` flag is set and nearly repeated roots are merged.
inline RootSet solve_cubic(const Cubic& c, double tol_degenerate = kDefaultDegenerateTol) {
  detail::require_cubic(c);
  RootSet out;
  out.discriminant = discriminant(c);
  const auto dep = detail::depress(c);
  const RootCount count = count_real_roots(c, tol_degenerate);

  if (count == RootCount::Three && dep.p < 0.0) {
    out.roots = detail::three_roots_trig(dep);
  } else if (count == RootCount::One) {
    out.roots = {detail::one_root_cardano(dep)};
  } else {
    out.degenerate = true;
    const double b = c.a2 / c.a3;
    out.roots = detail::repeated_roots(dep, b * b / 3.0 + std::abs(c.a1 / c.a3) + 1e-300);
  }
  for (double& x : out.roots) x = detail::polish(c, x);
  const std::size_t before = out.roots.size();
  detail::sort_and_merge(out.roots);
  if (out.roots.size() != before && !out.degenerate) {
    // Polishing collapsed two roots; the count can no longer be trusted.
    out.degenerate = true;
  }
  return out;
}

}  // namespace bfmle
