#include <algorithm>
#include <set>

#include "doctest.h"
#include "sp/recognition.hpp"
#include "sp/sampling.hpp"

using namespace sp;

namespace {

// V1 and V2 over the seven-candidate axis 1 < 2 < 3 < 5 < 4 < 6 < 7:
// V1 is single-peaked on it, V2 has a valley at (3,4,5) on the natural axis.
const Vote kV1{4, 5, 6, 3, 2, 7, 1};
const Vote kV2{3, 5, 4, 2, 6, 1, 7};
const Axis kAxis7{1, 2, 3, 5, 4, 6, 7};

}  // namespace

TEST_CASE("has_valley") {
  const Axis natural{1, 2, 3, 4, 5, 6, 7};
  CHECK(has_valley(kV2, natural, 3, 4, 5));
  // A vote descending along the axis has no valley at all.
  const Vote descending{1, 2, 3, 4, 5, 6, 7};
  for (int c1 = 1; c1 <= 7; ++c1)
    for (int c2 = c1 + 1; c2 <= 7; ++c2)
      for (int c3 = c2 + 1; c3 <= 7; ++c3)
        CHECK_FALSE(has_valley(descending, natural, c1, c2, c3));
  CHECK(has_valley({1, 3, 2}, {1, 2, 3}, 1, 2, 3));
  // Triple must respect the axis order.
  CHECK_THROWS_AS(has_valley({1, 3, 2}, {1, 2, 3}, 2, 1, 3),
                  std::invalid_argument);
}

TEST_CASE("is_sp_wrt_axis") {
  CHECK(is_sp_wrt_axis(kV1, kAxis7));
  CHECK(is_sp_wrt_axis(kV1, reverse(kAxis7)));
  CHECK_FALSE(is_sp_wrt_axis(kV2, Axis{1, 2, 3, 4, 5, 6, 7}));
  const Election e{7, {kV1, kV2}};
  CHECK_FALSE(is_sp_wrt_axis(e, Axis{1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("enumerate_sp_votes") {
  for (int m = 1; m <= 6; ++m) {
    const Axis a = identity_vote(m);
    const auto votes = enumerate_sp_votes(a);
    CHECK(votes.size() == (std::size_t)1 << (m - 1));
    std::set<Vote> distinct(votes.begin(), votes.end());
    CHECK(distinct.size() == votes.size());
    for (const Vote& v : votes) CHECK(is_sp_wrt_axis(v, a));
  }
  // m = 3 on axis 1<2<3: everything except the two votes bottoming 2.
  const auto v3 = enumerate_sp_votes({1, 2, 3});
  const std::set<Vote> got(v3.begin(), v3.end());
  const std::set<Vote> want{{1, 2, 3}, {2, 1, 3}, {2, 3, 1}, {3, 2, 1}};
  CHECK(got == want);
}

TEST_CASE("recognition, small and guarded") {
  const Election yes{7, {kV1, kV2}};
  auto w = recognize_fast(yes);
  REQUIRE(w);
  CHECK(*w == kAxis7);
  CHECK(*recognize_exhaustive(yes) == kAxis7);

  // The Condorcet-cycle-like triple is not single-peaked.
  const Election no{3, {{2, 3, 1}, {1, 3, 2}, {1, 2, 3}}};
  CHECK_FALSE(recognize_fast(no));
  CHECK_FALSE(recognize_exhaustive(no));

  // Any single vote is single-peaked.
  const Election single{5, {{3, 5, 1, 2, 4}}};
  CHECK(recognize_fast(single));

  const Election big{11, {identity_vote(11)}};
  CHECK_THROWS_AS(recognize_exhaustive(big), capability_error);
}

TEST_CASE("fast recognition agrees with the exhaustive oracle") {
  // Exhaustive over all (2,3)-elections.
  Vote v = identity_vote(3);
  std::vector<Vote> perms;
  do {
    perms.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  for (const Vote& a : perms)
    for (const Vote& b : perms) {
      const Election e{3, {a, b}};
      CHECK(recognize_fast(e).has_value() ==
            recognize_exhaustive(e).has_value());
    }

  // Random elections of varied shape; any witness must verify.
  RngStream rng(20260826, 0);
  for (int t = 0; t < 400; ++t) {
    const int m = 3 + (int)rng.below(5);  // 3..7
    const int n = 1 + (int)rng.below(6);  // 1..6
    Election e{m, {}};
    for (int i = 0; i < n; ++i)
      e.votes.push_back(sample_uniform_vote(m, rng));
    const auto fast = recognize_fast(e);
    CHECK(fast.has_value() == recognize_exhaustive(e).has_value());
    if (fast) CHECK(is_sp_wrt_axis(e, *fast));
  }

  // Biased toward positive cases: votes drawn single-peaked on a hidden axis.
  for (int t = 0; t < 200; ++t) {
    const int m = 4 + (int)rng.below(4);
    const Axis hidden = sample_uniform_vote(m, rng);
    const auto pool = enumerate_sp_votes(hidden);
    Election e{m, {}};
    for (int i = 0; i < 4; ++i)
      e.votes.push_back(pool[rng.below(pool.size())]);
    const auto fast = recognize_fast(e);
    REQUIRE(fast);
    CHECK(is_sp_wrt_axis(e, *fast));
  }
}
