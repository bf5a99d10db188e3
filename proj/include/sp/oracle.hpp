#pragma once

#include <functional>

#include "sp/core.hpp"
#include "sp/numeric.hpp"

namespace sp {

// Calls fn for every ordered (n,m)-election, in lexicographic vote order.
// Guarded: (m!)^n must not exceed 10^8.
void enumerate_elections(int n, int m,
                         const std::function<void(const Election&)>& fn);

// Calls fn for every multiset (n,m)-election.
// Guarded: multiset_coeff(m!, n) must not exceed 10^7.
void enumerate_multiset_elections(
    int n, int m, const std::function<void(const MultisetElection&)>& fn);

// Exhaustive counts, for cross-checking the closed formulas.
BigInt brute_count_sp(int n, int m);
BigInt brute_count_sp_multisets(int n, int m);
BigInt brute_count_avoiders(int m, const std::vector<Vote>& patterns);

}  // namespace sp
