#pragma once

#include <cstdint>
#include <functional>

#include "sp/core.hpp"
#include "sp/sampling.hpp"

namespace sp {

struct EstimateResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0;
  double ci_low = 0;   // Wilson score interval, 95%
  double ci_high = 0;
};

// Wilson score interval for a binomial proportion at 95% confidence.
void wilson_interval(std::uint64_t successes, std::uint64_t trials,
                     double& low, double& high);

// Monte Carlo estimate of P(predicate) over elections drawn from the model.
// Trials are partitioned into fixed-size blocks; block i uses rng stream i,
// so the result is identical for any worker count.
EstimateResult estimate_probability(
    const ModelSpec& spec, int n, int m, std::uint64_t trials,
    std::uint64_t seed, const std::function<bool(const Election&)>& predicate,
    unsigned workers = 1);

// Convenience wrapper: probability of being single-peaked.
EstimateResult estimate_sp_probability(const ModelSpec& spec, int n, int m,
                                       std::uint64_t trials,
                                       std::uint64_t seed,
                                       unsigned workers = 1);

}  // namespace sp
