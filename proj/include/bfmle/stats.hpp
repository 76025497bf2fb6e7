#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "bfmle/errors.hpp"

namespace bfmle {

// Sufficient statistics of two independent normal samples. Variances use the
// maximum-likelihood convention (divisor n, not n - 1).
struct SummaryStats {
  int n = 0;
  int m = 0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;

  double ratio() const { return static_cast<double>(n) / m; }
};

// Scale-free quantities that determine the root count of the likelihood
// cubic: r = n/m, gamma_hat = sd_x/sd_y, delta_hat = (mean_x - mean_y)/sd_y.
struct ReducedStats {
  double r = 0.0;
  double gamma_hat = 0.0;
  double delta_hat = 0.0;
};

// Throws DomainError (or a subclass) unless n, m >= 2 and both variances are
// finite and positive.
inline void validate(const SummaryStats& s) {
  if (s.n < 2 || s.m < 2) {
    throw LengthError("sample sizes must be at least 2 (got n=" + std::to_string(s.n) +
                      ", m=" + std::to_string(s.m) + ")");
  }
  if (!std::isfinite(s.mean_x) || !std::isfinite(s.mean_y)) {
    throw DomainError("sample means must be finite");
  }
  if (!(s.var_x > 0.0) || !(s.var_y > 0.0) || !std::isfinite(s.var_x) ||
      !std::isfinite(s.var_y)) {
    throw DegenerateVariance("empirical variances must be finite and positive");
  }
}

namespace detail {

struct MeanVar {
  double mean;
  double var;
};

// Two-pass mean and divisor-n variance, with the usual correction term
// for the rounding error of the first pass.
inline MeanVar mean_var(std::span<const double> v, const char* name) {
  if (v.size() < 2) {
    throw LengthError(std::string("sample ") + name + " needs at least 2 values");
  }
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) throw DomainError(std::string("sample ") + name + " has non-finite value");
    sum += x;
  }
  const auto count = static_cast<double>(v.size());
  const double mean = sum / count;
  double ss = 0.0;
  double comp = 0.0;
  for (double x : v) {
    const double d = x - mean;
    ss += d * d;
    comp += d;
  }
  const double var = (ss - comp * comp / count) / count;
  const bool constant = std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
  if (constant || !(var > 0.0)) {
    throw DegenerateVariance(std::string("sample ") + name + " has zero empirical variance");
  }
  return {mean + comp / count, var};
}

}  // namespace detail

inline SummaryStats summarize(std::span<const double> xs, std::span<const double> ys) {
  const auto x = detail::mean_var(xs, "x");
  const auto y = detail::mean_var(ys, "y");
  return {static_cast<int>(xs.size()), static_cast<int>(ys.size()), x.mean, y.mean, x.var, y.var};
}

inline ReducedStats reduce(const SummaryStats& s) {
  validate(s);
  const double sd_y = std::sqrt(s.var_y);
  return {s.ratio(), std::sqrt(s.var_x / s.var_y), (s.mean_x - s.mean_y) / sd_y};
}

// Converts a divisor-(n-1) variance to the divisor-n convention used here.
inline double unbiased_to_mle_variance(double unbiased_var, int n) {
  if (n < 2) throw LengthError("sample size must be at least 2");
  return unbiased_var * (n - 1) / n;
}

}  // namespace bfmle
