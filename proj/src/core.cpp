#include "sp/core.hpp"

#include <algorithm>

namespace sp {

bool is_valid_vote(const Vote& v) {
  const int m = static_cast<int>(v.size());
  if (m == 0) return false;
  std::vector<bool> seen(m, false);
  for (int c : v) {
    if (c < 1 || c > m || seen[c - 1]) return false;
    seen[c - 1] = true;
  }
  return true;
}

void validate_vote(const Vote& v) {
  if (!is_valid_vote(v))
    throw std::invalid_argument("vote is not a permutation of 1..m");
}

void validate_election(const Election& e) {
  if (e.votes.empty()) throw std::invalid_argument("election has no votes");
  for (const Vote& v : e.votes) {
    validate_vote(v);
    if (static_cast<int>(v.size()) != e.m)
      throw std::invalid_argument("vote length does not match candidate count");
  }
}

Election to_election(const MultisetElection& ms) {
  Election e;
  e.m = ms.m;
  for (const auto& [v, c] : ms.counts)
    for (long long i = 0; i < c; ++i) e.votes.push_back(v);
  return e;
}

MultisetElection to_multiset(const Election& e) {
  MultisetElection ms;
  ms.m = e.m;
  for (const Vote& v : e.votes) ++ms.counts[v];
  return ms;
}

std::vector<int> rank_of(const Vote& v) {
  std::vector<int> r(v.size());
  for (int i = 0; i < static_cast<int>(v.size()); ++i) r[v[i] - 1] = i;
  return r;
}

int kendall_tau(const Vote& v, const Vote& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("kendall_tau: mismatched candidate counts");
  const int m = static_cast<int>(v.size());
  const auto rv = rank_of(v), rw = rank_of(w);
  int d = 0;
  for (int c = 0; c < m; ++c)
    for (int c2 = c + 1; c2 < m; ++c2)
      if ((rv[c] < rv[c2]) != (rw[c] < rw[c2])) ++d;
  return d;
}

Vote reverse(const Vote& v) { return Vote(v.rbegin(), v.rend()); }

Vote perm_of_pair(const Vote& t1, const Vote& t2) {
  if (t1.size() != t2.size())
    throw std::invalid_argument("perm_of_pair: mismatched candidate counts");
  const auto r2 = rank_of(t2);
  Vote p(t1.size());
  for (int i = 0; i < static_cast<int>(t1.size()); ++i)
    p[i] = r2[t1[i] - 1] + 1;
  return p;
}

Vote inverse(const Vote& p) {
  Vote q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i] - 1] = i + 1;
  return q;
}

Vote identity_vote(int m) {
  Vote v(m);
  for (int i = 0; i < m; ++i) v[i] = i + 1;
  return v;
}

std::uint64_t factorial_u64(int m) {
  if (m < 0 || m > 20) throw std::invalid_argument("factorial_u64: m out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace sp
