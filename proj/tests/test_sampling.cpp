#include <map>

#include "doctest.h"
#include "sp/oracle.hpp"
#include "sp/sampling.hpp"

using namespace sp;

TEST_CASE("rng streams are deterministic and distinct") {
  RngStream a(42, 0), b(42, 0), c(42, 1);
  bool all_equal = true;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next();
    if (x != b.next()) all_equal = false;
  }
  CHECK(all_equal);
  bool saw_difference = false;
  RngStream a2(42, 0);
  for (int i = 0; i < 64; ++i)
    if (a2.next() != c.next()) saw_difference = true;
  CHECK(saw_difference);
  CHECK_THROWS_AS(a.below(0), std::invalid_argument);
}

TEST_CASE("below is in range and roughly uniform") {
  RngStream rng(7, 0);
  std::map<std::uint64_t, int> hist;
  for (int i = 0; i < 60000; ++i) ++hist[rng.below(6)];
  CHECK(hist.size() == 6);
  for (const auto& [k, c] : hist) {
    CHECK(k < 6);
    CHECK(c > 9500);  // expected 10000, generous slack
    CHECK(c < 10500);
  }
}

TEST_CASE("model parsing") {
  CHECK(parse_model("ic", "").model == Model::ic);
  CHECK(parse_model("iac", "").model == Model::iac);
  CHECK(parse_model("polya", "120").contagion == 120);
  CHECK(parse_model("mallows", "0.1").phi == Rational(1, 10));
  CHECK_THROWS_AS(parse_model("urn", ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_model("polya", ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_model("mallows", "1.5"), std::invalid_argument);
}

TEST_CASE("samples are valid elections") {
  RngStream rng(3, 0);
  for (const auto& spec :
       {ModelSpec::ic(), ModelSpec::iac(), ModelSpec::polya(50),
        ModelSpec::mallows(Rational(1, 5))}) {
    const Election e = sample_election(spec, 6, 5, rng);
    CHECK(e.n() == 6);
    CHECK_NOTHROW(validate_election(e));
  }
}

TEST_CASE("same seed same sample") {
  const auto spec = ModelSpec::mallows(Rational(1, 10));
  RngStream r1(99, 4), r2(99, 4);
  CHECK(sample_election(spec, 5, 6, r1).votes ==
        sample_election(spec, 5, 6, r2).votes);
}

TEST_CASE("urn sequence probabilities sum to one") {
  for (const BigInt a : {BigInt(0), BigInt(1),  BigInt(3)}) {
    Rational sum = 0;
    enumerate_elections(2, 3, [&](const Election& e) {
      sum += polya_sequence_probability(e, a);
    });
    CHECK(sum == 1);
  }
}

TEST_CASE("urn sequence and multiset forms agree") {
  // Sum of path probabilities over the orderings of a multiset equals the
  // closed form; collect per-multiset and compare.
  const BigInt a = 2;
  std::map<std::map<Vote, long long>, Rational> by_multiset;
  enumerate_elections(3, 2, [&](const Election& e) {
    by_multiset[to_multiset(e).counts] += polya_sequence_probability(e, a);
  });
  enumerate_multiset_elections(3, 2, [&](const MultisetElection& ms) {
    CHECK(by_multiset.at(ms.counts) == polya_multiset_probability(ms, a));
  });
}

TEST_CASE("a = 1 gives the uniform multiset distribution") {
  Rational expected{1, 21};  // multiset_coeff(3!, 2) = 21
  enumerate_multiset_elections(2, 3, [&](const MultisetElection& ms) {
    CHECK(polya_multiset_probability(ms, 1) == expected);
  });
}

TEST_CASE("insertion probabilities reproduce the Kendall-tau weights") {
  const Vote ref{2, 4, 1, 3};
  for (const Rational phi : {Rational(1, 10), Rational(1, 3), Rational(1)}) {
    Rational sum = 0;
    Vote v = identity_vote(4);
    do {
      const Rational p = rim_probability(v, ref, phi);
      CHECK(p == mallows_vote_probability(v, ref, phi));
      sum += p;
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(sum == 1);
  }
}

TEST_CASE("mallows sampler matches its pmf empirically") {
  const Vote ref{1, 2, 3};
  const Rational phi{1, 2};
  RngStream rng(123, 0);
  const int trials = 60000;
  std::map<Vote, int> hist;
  for (int i = 0; i < trials; ++i)
    ++hist[sample_mallows_vote(3, 0.5, ref, rng)];
  Vote v = identity_vote(3);
  do {
    const double expect =
        mallows_vote_probability(v, ref, phi).convert_to<double>() * trials;
    const double got = hist[v];
    // 5 sigma of a binomial count.
    CHECK(std::fabs(got - expect) < 5 * std::sqrt(expect));
  } while (std::next_permutation(v.begin(), v.end()));
}
