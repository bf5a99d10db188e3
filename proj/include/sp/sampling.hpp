#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sp/core.hpp"
#include "sp/numeric.hpp"

namespace sp {

// Deterministic stream of random numbers: (seed, stream) fully determines the
// output, independent of platform. Distinct streams are statistically
// independent for practical purposes.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();

  // Uniform draw from {0, ..., n-1}, unbiased via rejection.
  std::uint64_t below(std::uint64_t n);

  double uniform01();  // in [0, 1)

 private:
  std::mt19937_64 engine_;
};

enum class Model { ic, iac, polya, mallows };

struct ModelSpec {
  Model model = Model::ic;
  BigInt contagion = 0;   // Polya urn parameter a
  Rational phi = 1;       // Mallows dispersion, in (0, 1]
  Vote reference;         // Mallows reference order; empty means 1..m

  static ModelSpec ic();
  static ModelSpec iac();
  static ModelSpec polya(const BigInt& a);
  static ModelSpec mallows(const Rational& phi, Vote reference = {});

  std::string name() const;
};

ModelSpec parse_model(const std::string& name, const std::string& param);

Vote sample_uniform_vote(int m, RngStream& rng);
Vote sample_mallows_vote(int m, double phi, const Vote& reference, RngStream& rng);
Election sample_election(const ModelSpec& spec, int n, int m, RngStream& rng);

// Exact probability that the urn process emits exactly this vote sequence.
Rational polya_sequence_probability(const Election& e, const BigInt& a);

// Closed-form urn probability of a vote multiset (all orderings together):
// n!/(prod n_i!) * prod (1)_{n_i,a} / (m!)_{n,a}.
Rational polya_multiset_probability(const MultisetElection& ms, const BigInt& a);

// Exact probability that repeated insertion produces exactly this vote:
// candidate i of the reference goes to position j with weight phi^{i-j}.
Rational rim_probability(const Vote& v, const Vote& reference,
                         const Rational& phi);

// phi^{kendall_tau(v, reference)} / Z(m, phi).
Rational mallows_vote_probability(const Vote& v, const Vote& reference,
                                  const Rational& phi);

}  // namespace sp
