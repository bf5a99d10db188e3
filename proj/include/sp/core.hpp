#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace sp {

// A vote is a ranking of the candidates 1..m, most-preferred first.
// The same representation doubles as an m-permutation written as its
// sequence of values, e.g. {3,2,1} is the permutation 321.
using Vote = std::vector<int>;

// An ordered list of votes over a common candidate set {1..m}.
// The order of votes is significant.
struct Election {
  int m = 0;
  std::vector<Vote> votes;

  int n() const { return static_cast<int>(votes.size()); }
};

// An election considered as a multiset of votes.
struct MultisetElection {
  int m = 0;
  std::map<Vote, long long> counts;

  long long n() const {
    long long s = 0;
    for (const auto& [v, c] : counts) s += c;
    return s;
  }
};

// Thrown when an input exceeds a hard enumeration guard.
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_valid_vote(const Vote& v);
void validate_vote(const Vote& v);
void validate_election(const Election& e);

Election to_election(const MultisetElection& ms);
MultisetElection to_multiset(const Election& e);

// rank_of(v)[c-1] = position of candidate c in v, 0 = most preferred.
std::vector<int> rank_of(const Vote& v);

// Number of candidate pairs ordered oppositely by v and w.
int kendall_tau(const Vote& v, const Vote& w);

Vote reverse(const Vote& v);

// The permutation p(t1,t2): i maps to j iff the i-th ranked candidate of
// t1 is the j-th ranked candidate of t2.
Vote perm_of_pair(const Vote& t1, const Vote& t2);

Vote inverse(const Vote& p);

Vote identity_vote(int m);

// m! for m <= 20.
std::uint64_t factorial_u64(int m);

}  // namespace sp
