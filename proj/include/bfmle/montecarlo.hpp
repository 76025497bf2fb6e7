#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "bfmle/cubic.hpp"
#include "bfmle/errors.hpp"
#include "bfmle/likelihood.hpp"
#include "bfmle/rng.hpp"
#include "bfmle/stats.hpp"

namespace bfmle {

struct SimConfig {
  int n = 15;
  int m = 15;
  double mu_x = 0.0;
  double mu_y = 0.0;
  double var_x = 1.0;
  double var_y = 1.0;
  std::uint64_t replications = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
};

// `replications` counts the replicates that entered p_hat; degenerate ones
// are tallied separately and excluded from both numerator and denominator.
struct SimResult {
  std::uint64_t count_three = 0;
  std::uint64_t replications = 0;
  double p_hat = 0.0;
  double std_err = 0.0;
  std::uint64_t degenerate_count = 0;
};

struct SweepRow {
  double delta;
  SimResult result;
};

inline void validate(const SimConfig& c) {
  if (c.n < 2 || c.m < 2) throw DomainError("n and m must be at least 2");
  if (!std::isfinite(c.mu_x) || !std::isfinite(c.mu_y)) throw DomainError("means must be finite");
  if (!(c.var_x > 0.0) || !(c.var_y > 0.0) || !std::isfinite(c.var_x) || !std::isfinite(c.var_y)) {
    throw DomainError("variances must be positive and finite");
  }
  if (c.replications < 1) throw DomainError("replications must be at least 1");
  if (c.workers < 1) throw DomainError("workers must be at least 1");
}

enum class ReplicateOutcome { One, Three, Degenerate };

namespace detail {

struct Tally {
  std::uint64_t three = 0;
  std::uint64_t one = 0;
  std::uint64_t degenerate = 0;
};

// Scratch buffers reused across the replicates of one worker.
class ReplicateRunner {
 public:
  explicit ReplicateRunner(const SimConfig& cfg)
      : cfg_(cfg), sd_x_(std::sqrt(cfg.var_x)), sd_y_(std::sqrt(cfg.var_y)), xs_(cfg.n), ys_(cfg.m) {}

  ReplicateOutcome run(std::uint64_t grid_index, std::uint64_t replicate) {
    NormalSampler normal(stream_key(cfg_.seed, grid_index, replicate));
    for (double& x : xs_) x = cfg_.mu_x + sd_x_ * normal();
    for (double& y : ys_) y = cfg_.mu_y + sd_y_ * normal();
    try {
      switch (count_real_roots(cubic_coefficients(summarize(xs_, ys_)))) {
        case RootCount::One: return ReplicateOutcome::One;
        case RootCount::Three: return ReplicateOutcome::Three;
        case RootCount::Degenerate: break;
      }
    } catch (const DegenerateVariance&) {
    }
    return ReplicateOutcome::Degenerate;
  }

 private:
  const SimConfig& cfg_;
  double sd_x_;
  double sd_y_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

inline Tally run_block(const SimConfig& cfg, std::uint64_t grid_index, std::uint64_t begin, std::uint64_t end) {
  ReplicateRunner runner(cfg);
  Tally t;
  for (std::uint64_t i = begin; i < end; ++i) {
    switch (runner.run(grid_index, i)) {
      case ReplicateOutcome::One: ++t.one; break;
      case ReplicateOutcome::Three: ++t.three; break;
      case ReplicateOutcome::Degenerate: ++t.degenerate; break;
    }
  }
  return t;
}

}  // namespace detail

// Outcome of a single replicate; the same draw estimate_prob_three makes.
inline ReplicateOutcome simulate_replicate(const SimConfig& cfg, std::uint64_t grid_index, std::uint64_t replicate) {
  validate(cfg);
  return detail::ReplicateRunner(cfg).run(grid_index, replicate);
}

// Monte Carlo estimate of P(three stationary points). Replicate i draws from
// its own stream keyed on (seed, grid_index, i), and the per-worker tallies
// are integer sums, so the result does not depend on cfg.workers.
inline SimResult estimate_prob_three(const SimConfig& cfg, std::uint64_t grid_index = 0) {
  validate(cfg);
  const auto total = cfg.replications;
  const auto lanes = std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.workers), total);
  std::vector<detail::Tally> tallies(lanes);
  {
    std::vector<std::jthread> threads;
    threads.reserve(lanes);
    for (std::uint64_t w = 0; w < lanes; ++w) {
      const auto begin = total * w / lanes;
      const auto end = total * (w + 1) / lanes;
      threads.emplace_back([&, w, begin, end] { tallies[w] = detail::run_block(cfg, grid_index, begin, end); });
    }
  }
  SimResult res;
  for (const auto& t : tallies) {
    res.count_three += t.three;
    res.replications += t.three + t.one;
    res.degenerate_count += t.degenerate;
  }
  if (res.replications > 0) {
    res.p_hat = static_cast<double>(res.count_three) / static_cast<double>(res.replications);
    res.std_err = std::sqrt(res.p_hat * (1.0 - res.p_hat) / static_cast<double>(res.replications));
  }
  return res;
}

// One estimate per delta with mu_x = delta and mu_y = 0; grid point i uses
// grid_index i for its streams.
inline std::vector<SweepRow> sweep_delta(const SimConfig& base, std::span<const double> deltas) {
  std::vector<SweepRow> rows;
  rows.reserve(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    SimConfig cfg = base;
    cfg.mu_x = deltas[i];
    cfg.mu_y = 0.0;
    rows.push_back({deltas[i], estimate_prob_three(cfg, i)});
  }
  return rows;
}

}  // namespace bfmle
