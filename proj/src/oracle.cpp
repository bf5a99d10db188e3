#include "sp/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "sp/patterns.hpp"
#include "sp/recognition.hpp"

namespace sp {

namespace {

std::vector<Vote> all_votes(int m) {
  std::vector<Vote> out;
  Vote v(m);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

void enumerate_elections(int n, int m,
                         const std::function<void(const Election&)>& fn) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("enumerate_elections: n and m must be positive");
  const BigInt total = [&] {
    BigInt t = 1;
    for (int i = 0; i < n; ++i) t *= factorial(m);
    return t;
  }();
  if (total > 100000000)
    throw capability_error("enumerate_elections: (m!)^n exceeds 10^8");

  const std::vector<Vote> votes = all_votes(m);
  Election e;
  e.m = m;
  e.votes.assign(n, votes.front());
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    fn(e);
    int pos = n - 1;
    while (pos >= 0 && idx[pos] + 1 == votes.size()) {
      idx[pos] = 0;
      e.votes[pos] = votes.front();
      --pos;
    }
    if (pos < 0) break;
    e.votes[pos] = votes[++idx[pos]];
  }
}

void enumerate_multiset_elections(
    int n, int m, const std::function<void(const MultisetElection&)>& fn) {
  if (n < 1 || m < 1)
    throw std::invalid_argument(
        "enumerate_multiset_elections: n and m must be positive");
  if (multiset_coeff(factorial(m), n) > 10000000)
    throw capability_error(
        "enumerate_multiset_elections: multiset count exceeds 10^7");

  const std::vector<Vote> votes = all_votes(m);
  MultisetElection ms;
  ms.m = m;
  // Non-decreasing index sequences over the vote list = multisets.
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    ms.counts.clear();
    for (std::size_t i : idx) ++ms.counts[votes[i]];
    fn(ms);
    int pos = n - 1;
    while (pos >= 0 && idx[pos] + 1 == votes.size()) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[pos] + 1;
    for (int i = pos; i < n; ++i) idx[i] = next;
  }
}

BigInt brute_count_sp(int n, int m) {
  BigInt count = 0;
  enumerate_elections(n, m, [&](const Election& e) {
    if (recognize_exhaustive(e)) ++count;
  });
  return count;
}

BigInt brute_count_sp_multisets(int n, int m) {
  BigInt count = 0;
  enumerate_multiset_elections(n, m, [&](const MultisetElection& ms) {
    if (recognize_exhaustive(to_election(ms))) ++count;
  });
  return count;
}

BigInt brute_count_avoiders(int m, const std::vector<Vote>& patterns) {
  return count_avoiders(m, patterns);
}

}  // namespace sp
