#include "sp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sp/counting.hpp"

namespace sp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

std::uint64_t RngStream::next() { return engine_(); }

std::uint64_t RngStream::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RngStream::below: n == 0");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

double RngStream::uniform01() {
  return (next() >> 11) * 0x1.0p-53;  // 53 uniform bits in [0,1)
}

ModelSpec ModelSpec::ic() { return ModelSpec{Model::ic, 0, 1, {}}; }

ModelSpec ModelSpec::iac() { return ModelSpec{Model::iac, 1, 1, {}}; }

ModelSpec ModelSpec::polya(const BigInt& a) {
  if (a < 0) throw std::invalid_argument("polya: contagion must be >= 0");
  return ModelSpec{Model::polya, a, 1, {}};
}

ModelSpec ModelSpec::mallows(const Rational& phi, Vote reference) {
  if (phi <= 0 || phi > 1)
    throw std::invalid_argument("mallows: phi must be in (0, 1]");
  return ModelSpec{Model::mallows, 0, phi, std::move(reference)};
}

std::string ModelSpec::name() const {
  switch (model) {
    case Model::ic: return "ic";
    case Model::iac: return "iac";
    case Model::polya: return "polya";
    case Model::mallows: return "mallows";
  }
  return "?";
}

ModelSpec parse_model(const std::string& name, const std::string& param) {
  if (name == "ic") return ModelSpec::ic();
  if (name == "iac") return ModelSpec::iac();
  if (name == "polya") {
    if (param.empty())
      throw std::invalid_argument("polya model requires a contagion parameter");
    return ModelSpec::polya(BigInt(param));
  }
  if (name == "mallows") {
    if (param.empty())
      throw std::invalid_argument("mallows model requires a dispersion parameter");
    return ModelSpec::mallows(rational_from_decimal(param));
  }
  throw std::invalid_argument("unknown model: " + name);
}

Vote sample_uniform_vote(int m, RngStream& rng) {
  Vote v(m);
  std::iota(v.begin(), v.end(), 1);
  for (int i = m - 1; i > 0; --i)
    std::swap(v[i], v[rng.below((std::uint64_t)i + 1)]);
  return v;
}

Vote sample_mallows_vote(int m, double phi, const Vote& reference,
                         RngStream& rng) {
  Vote v;
  v.reserve(m);
  for (int i = 1; i <= m; ++i) {
    // Insert reference[i-1] at position j in {1..i}; weight phi^{i-j}
    // counts the inversions the insertion creates.
    double total = 0, w = 1;
    for (int j = i; j >= 1; --j) {
      total += w;
      w *= phi;
    }
    double u = rng.uniform01() * total;
    int pos = i;
    w = 1;
    for (int j = i; j >= 1; --j) {
      u -= w;
      if (u < 0) {
        pos = j;
        break;
      }
      w *= phi;
    }
    v.insert(v.begin() + (pos - 1), reference[i - 1]);
  }
  return v;
}

Election sample_election(const ModelSpec& spec, int n, int m, RngStream& rng) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("sample_election: n and m must be positive");
  Election e;
  e.m = m;
  e.votes.reserve(n);
  switch (spec.model) {
    case Model::ic: {
      for (int i = 0; i < n; ++i) e.votes.push_back(sample_uniform_vote(m, rng));
      break;
    }
    case Model::iac:
    case Model::polya: {
      const BigInt a = spec.model == Model::iac ? 1 : spec.contagion;
      const double mf = Rational(factorial(m)).convert_to<double>();
      const double ad = a.convert_to<double>();
      for (int i = 0; i < n; ++i) {
        // Urn with m! distinct votes, a copies added per draw: equivalent to
        // copying a uniform earlier vote with probability a*i/(m!+a*i),
        // drawing fresh otherwise.
        const double p_fresh = mf / (mf + ad * i);
        if (i == 0 || rng.uniform01() < p_fresh)
          e.votes.push_back(sample_uniform_vote(m, rng));
        else
          e.votes.push_back(e.votes[rng.below((std::uint64_t)i)]);
      }
      break;
    }
    case Model::mallows: {
      Vote ref = spec.reference.empty() ? identity_vote(m) : spec.reference;
      if ((int)ref.size() != m || !is_valid_vote(ref))
        throw std::invalid_argument("sample_election: bad reference order");
      const double phi = spec.phi.convert_to<double>();
      for (int i = 0; i < n; ++i)
        e.votes.push_back(sample_mallows_vote(m, phi, ref, rng));
      break;
    }
  }
  return e;
}

Rational polya_sequence_probability(const Election& e, const BigInt& a) {
  validate_election(e);
  const BigInt mf = factorial(e.m);
  Rational p = 1;
  std::map<Vote, BigInt> seen;
  for (std::size_t i = 0; i < e.votes.size(); ++i) {
    BigInt& cnt = seen[e.votes[i]];
    p *= Rational(1 + a * cnt, mf + a * (BigInt)i);
    cnt += 1;
  }
  return p;
}

Rational polya_multiset_probability(const MultisetElection& ms,
                                    const BigInt& a) {
  const unsigned n = (unsigned)ms.n();
  const unsigned ak = a.convert_to<unsigned>();
  Rational p{factorial(n)};
  for (const auto& [v, c] : ms.counts) {
    p /= Rational(factorial((unsigned)c));
    p *= pochhammer_k(1, (unsigned)c, ak);
  }
  p /= pochhammer_k(Rational(factorial(ms.m)), n, ak);
  return p;
}

Rational rim_probability(const Vote& v, const Vote& reference,
                         const Rational& phi) {
  const int m = (int)v.size();
  if ((int)reference.size() != m)
    throw std::invalid_argument("rim_probability: dimension mismatch");
  const std::vector<int> rank = rank_of(v);
  Rational p = 1;
  Rational denom = 0, ppow = 1;
  for (int i = 1; i <= m; ++i) {
    denom += ppow;  // 1 + phi + ... + phi^{i-1}
    ppow *= phi;
    // j = rank of reference[i-1] among the first i reference candidates, in v.
    int j = 1;
    for (int t = 0; t < i - 1; ++t)
      if (rank[reference[t] - 1] < rank[reference[i - 1] - 1]) ++j;
    Rational num = 1;
    for (int t = 0; t < i - j; ++t) num *= phi;
    p *= num / denom;
  }
  return p;
}

Rational mallows_vote_probability(const Vote& v, const Vote& reference,
                                  const Rational& phi) {
  const int d = kendall_tau(v, reference);
  Rational num = 1;
  for (int i = 0; i < d; ++i) num *= phi;
  return num / mallows_z((int)v.size(), phi);
}

}  // namespace sp
