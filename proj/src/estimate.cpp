#include "sp/estimate.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sp/recognition.hpp"

namespace sp {

namespace {

constexpr std::uint64_t kBlockSize = 8192;
constexpr double kZ95 = 1.959963984540054;

}  // namespace

void wilson_interval(std::uint64_t successes, std::uint64_t trials,
                     double& low, double& high) {
  if (trials == 0) {
    low = 0;
    high = 1;
    return;
  }
  const double n = (double)trials;
  const double p = (double)successes / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1 + z2 / n;
  const double center = p + z2 / (2 * n);
  const double spread = kZ95 * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  low = successes == 0 ? 0.0 : std::max(0.0, (center - spread) / denom);
  high = successes == trials ? 1.0 : std::min(1.0, (center + spread) / denom);
}

EstimateResult estimate_probability(
    const ModelSpec& spec, int n, int m, std::uint64_t trials,
    std::uint64_t seed, const std::function<bool(const Election&)>& predicate,
    unsigned workers) {
  if (trials == 0) throw std::invalid_argument("estimate: trials == 0");
  if (workers == 0) workers = 1;

  const std::uint64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> successes{0};

  auto run = [&] {
    std::uint64_t local = 0;
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= blocks) break;
      const std::uint64_t lo = b * kBlockSize;
      const std::uint64_t hi = std::min(trials, lo + kBlockSize);
      RngStream rng(seed, b);
      for (std::uint64_t t = lo; t < hi; ++t)
        if (predicate(sample_election(spec, n, m, rng))) ++local;
    }
    successes.fetch_add(local);
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }

  EstimateResult r;
  r.trials = trials;
  r.successes = successes.load();
  r.estimate = (double)r.successes / (double)trials;
  wilson_interval(r.successes, r.trials, r.ci_low, r.ci_high);
  return r;
}

EstimateResult estimate_sp_probability(const ModelSpec& spec, int n, int m,
                                       std::uint64_t trials,
                                       std::uint64_t seed, unsigned workers) {
  return estimate_probability(
      spec, n, m, trials, seed,
      [](const Election& e) { return recognize_fast(e).has_value(); },
      workers);
}

}  // namespace sp
