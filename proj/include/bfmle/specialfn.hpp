#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bfmle/errors.hpp"

namespace bfmle {

// A probability in [0, 1].
struct TailProb {
  double value = 0.0;
};

// log Gamma(x) for x > 0 via the Lanczos approximation (g = 7, 9 terms).
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (x < 0.5) {
    // Reflection keeps the series in its accurate range.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  const double z = x - 1.0;
  double sum = kCoef[0];
  for (std::size_t i = 1; i < kCoef.size(); ++i) sum += kCoef[i] / (z + static_cast<double>(i));
  const double t = z + g + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

namespace detail {

inline constexpr int kBetaCfMaxIter = 300;

// Continued fraction for I_x(a, b) (modified Lentz).
inline double beta_continued_fraction(double a, double b, double x) {
  constexpr double eps = 1e-15;
  constexpr double tiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kBetaCfMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= eps) return h;
  }
  throw DomainError("incomplete beta continued fraction did not converge");
}

}  // namespace detail

namespace detail {

// I_x(a, b) given both x and y = 1 - x, so neither tail loses low bits.
inline double reg_inc_beta_xy(double a, double b, double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return 1.0;
  const double log_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) + a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

}  // namespace detail

// Regularized incomplete beta function I_x(a, b).
inline double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
    throw DomainError("reg_inc_beta requires a, b > 0 and 0 <= x <= 1");
  }
  return detail::reg_inc_beta_xy(a, b, x, 1.0 - x);
}

// P(|T| > |t|) for T Student-t with nu degrees of freedom.
inline TailProb t_two_sided_tail(double t, double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("degrees of freedom must be positive");
  if (std::isnan(t)) throw DomainError("t must not be NaN");
  if (std::isinf(t)) return {0.0};
  const double t2 = t * t;
  const double p = detail::reg_inc_beta_xy(0.5 * nu, 0.5, nu / (nu + t2), t2 / (nu + t2));
  return {std::clamp(p, 0.0, 1.0)};
}

}  // namespace bfmle
