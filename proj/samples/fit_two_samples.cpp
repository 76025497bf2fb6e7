// Fits the common-mean model to two small samples and prints every
// stationary point of the likelihood.
#include <cstdio>
#include <vector>

#include "bfmle/bfmle.hpp"

int main() {
  const std::vector<double> xs = {9.8, 10.4, 11.1, 10.0, 9.6, 10.9};
  const std::vector<double> ys = {4.1, 6.0, 3.2, 5.5, 4.9};

  const bfmle::SummaryStats s = bfmle::summarize(xs, ys);
  const bfmle::ReducedStats red = bfmle::reduce(s);
  const bfmle::NullFit fit = bfmle::fit_null(s);

  std::printf("r = %.4f  gamma_hat = %.4f  delta_hat = %.4f  D = %.6g\n", red.r, red.gamma_hat, red.delta_hat,
              bfmle::big_d(red.gamma_hat, red.delta_hat, red.r));
  std::printf("discriminant = %.6g  multimodal = %s\n", fit.discriminant, fit.multimodal ? "yes" : "no");
  for (const auto& p : fit.all_points) {
    std::printf("  mu = %10.6f  var_x = %9.5f  var_y = %9.5f  loglik = %11.5f  %s\n", p.params.mu, p.params.var_x,
                p.params.var_y, p.loglik, p.kind == bfmle::PointKind::LocalMax ? "max" : "saddle");
  }
  std::printf("mle mu = %.6f  lrt = %.6f\n", fit.mle.params.mu, bfmle::lrt_statistic(s));
  return 0;
}
