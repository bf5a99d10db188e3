#pragma once

#include <optional>

#include "sp/core.hpp"
#include "sp/numeric.hpp"

namespace sp {

// Matching of pi into tau: a strictly increasing map mu on {1..k} such
// that (mu(pi(1)), ..., mu(pi(k))) is a subsequence of tau. Returns nullopt
// if tau avoids the pattern pi.
std::optional<std::vector<int>> contains_pattern(const Vote& tau,
                                                 const Vote& pi);

// S_m(patterns): number of m-permutations avoiding every listed pattern.
// Brute force, guarded to m <= 9.
BigInt count_avoiders(int m, const std::vector<Vote>& patterns);

// C(2m-2, m-1) = S_m(1432, 4132, 2431, 4231).
BigInt central_binomial_count(int m);

// m-th large Schroder number (1, 2, 6, 22, 90, ...) = S_m(3142, 2413).
BigInt schroder(int m);

}  // namespace sp
