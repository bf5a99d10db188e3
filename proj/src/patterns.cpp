#include "sp/patterns.hpp"

#include <algorithm>

namespace sp {

namespace {

// Depth-first search over increasing position maps. chosen[j] = index into
// tau of the j-th pattern element (by position). Order-isomorphism is
// enforced pairwise against all previously chosen positions.
bool match_from(const Vote& tau, const Vote& pi, std::vector<int>& chosen,
                int depth, int start) {
  const int k = static_cast<int>(pi.size());
  if (depth == k) return true;
  for (int i = start; i < static_cast<int>(tau.size()); ++i) {
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j)
      ok = (pi[j] < pi[depth]) == (tau[chosen[j]] < tau[i]);
    if (!ok) continue;
    chosen[depth] = i;
    if (match_from(tau, pi, chosen, depth + 1, i + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_pattern(const Vote& tau,
                                                 const Vote& pi) {
  const int k = static_cast<int>(pi.size());
  if (k > static_cast<int>(tau.size())) return std::nullopt;
  std::vector<int> chosen(k);
  if (!match_from(tau, pi, chosen, 0, 0)) return std::nullopt;
  // chosen holds positions of the subsequence tau-values order-isomorphic
  // to pi; mu maps pattern value v to the chosen value of the same rank.
  std::vector<int> sub(k);
  for (int j = 0; j < k; ++j) sub[j] = tau[chosen[j]];
  std::vector<int> sorted = sub;
  std::sort(sorted.begin(), sorted.end());
  return sorted;  // mu(v) = sorted[v-1], strictly increasing by construction
}

BigInt count_avoiders(int m, const std::vector<Vote>& patterns) {
  if (m < 1 || m > 9)
    throw capability_error("count_avoiders: m out of brute-force range");
  Vote tau = identity_vote(m);
  BigInt count = 0;
  do {
    bool avoids = true;
    for (const Vote& pi : patterns)
      if (contains_pattern(tau, pi)) {
        avoids = false;
        break;
      }
    if (avoids) ++count;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return count;
}

BigInt central_binomial_count(int m) {
  if (m < 1) throw std::invalid_argument("central_binomial_count: m < 1");
  return binomial(2 * m - 2, m - 1);
}

BigInt schroder(int m) {
  if (m < 1) throw std::invalid_argument("schroder: m < 1");
  // A006318 with offset: schroder(1) = 1, schroder(2) = 2, ...
  // (n+1) a(n) = 3(2n-1) a(n-1) - (n-2) a(n-2)
  std::vector<BigInt> a(std::max(m, 2));
  a[0] = 1;
  a[1] = 2;
  for (int n = 2; n < m; ++n)
    a[n] = (3 * (2 * n - 1) * a[n - 1] - (n - 2) * a[n - 2]) / (n + 1);
  return a[m - 1];
}

}  // namespace sp
