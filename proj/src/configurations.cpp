#include "sp/configurations.hpp"

#include <algorithm>

namespace sp {

namespace {

// Checks rows against one item->candidate assignment. Consecutive pairs
// suffice since the votes' orders are transitive.
bool witness_ok(const std::vector<std::vector<int>>& vote_ranks,
                const std::vector<int>& f, const Configuration& cfg,
                const std::vector<int>& g) {
  for (int i = 0; i < cfg.l(); ++i) {
    const auto& rv = vote_ranks[f[i]];
    const Vote& t = cfg.orders[i];
    for (int j = 0; j + 1 < cfg.k; ++j)
      if (rv[g[t[j] - 1] - 1] >= rv[g[t[j + 1] - 1] - 1]) return false;
  }
  return true;
}

bool next_injection(std::vector<int>& f, int n) {
  // Lexicographic successor among tuples of distinct values in 0..n-1.
  const int l = static_cast<int>(f.size());
  std::vector<bool> used(n, false);
  for (int x : f) used[x] = true;
  for (int pos = l - 1; pos >= 0; --pos) {
    used[f[pos]] = false;
    for (int v = f[pos] + 1; v < n; ++v) {
      if (used[v]) continue;
      f[pos] = v;
      used[v] = true;
      for (int p = pos + 1; p < l; ++p)
        for (int w = 0; w < n; ++w)
          if (!used[w]) {
            f[p] = w;
            used[w] = true;
            break;
          }
      return true;
    }
  }
  return false;
}

std::vector<int> first_injection(int l, int n) {
  std::vector<int> f(l);
  for (int i = 0; i < l; ++i) f[i] = i;
  return f;
}

Vote enc(const char* word) {
  // 'a'..'z' -> 1..k
  Vote v;
  for (const char* p = word; *p; ++p) v.push_back(*p - 'a' + 1);
  return v;
}

Configuration cfg2(const char* t1, const char* t2) {
  Configuration c;
  c.orders = {enc(t1), enc(t2)};
  c.k = static_cast<int>(c.orders[0].size());
  return c;
}

Configuration cfg3(const char* t1, const char* t2, const char* t3) {
  Configuration c;
  c.orders = {enc(t1), enc(t2), enc(t3)};
  c.k = static_cast<int>(c.orders[0].size());
  return c;
}

}  // namespace

std::optional<ConfigWitness> contains_configuration(const Election& e,
                                                    const Configuration& cfg) {
  const int n = e.n();
  if (cfg.l() > n || cfg.k > e.m) return std::nullopt;
  std::vector<std::vector<int>> vote_ranks;
  vote_ranks.reserve(n);
  for (const Vote& v : e.votes) vote_ranks.push_back(rank_of(v));

  std::vector<int> f = first_injection(cfg.l(), n);
  do {
    std::vector<int> g = first_injection(cfg.k, e.m);
    do {
      std::vector<int> g1(g.size());
      for (size_t i = 0; i < g.size(); ++i) g1[i] = g[i] + 1;
      if (witness_ok(vote_ranks, f, cfg, g1))
        return ConfigWitness{f, g1};
    } while (next_injection(g, e.m));
  } while (next_injection(f, n));
  return std::nullopt;
}

bool avoids_all(const Election& e, const std::vector<Configuration>& cfgs) {
  for (const Configuration& c : cfgs)
    if (contains_configuration(e, c)) return false;
  return true;
}

const std::vector<Configuration>& sp_forbidden_set() {
  static const std::vector<Configuration> set = {
      cfg2("dabc", "dcba"), cfg2("adbc", "dcba"),
      cfg2("dabc", "cdba"), cfg2("adbc", "cdba"),
      cfg3("bca", "acb", "abc"), cfg3("cba", "acb", "abc"),
      cfg3("bca", "cab", "abc"), cfg3("cba", "cab", "abc"),
      cfg3("bca", "acb", "bac"), cfg3("cba", "acb", "bac"),
      cfg3("bca", "cab", "bac"), cfg3("cba", "cab", "bac"),
  };
  return set;
}

Configuration gs_configuration() { return cfg2("abcd", "bdac"); }

std::pair<Election, Configuration> lemma1_instance(const Vote& pi,
                                                   const Vote& tau) {
  validate_vote(pi);
  validate_vote(tau);
  const int k = static_cast<int>(pi.size());
  const int m = static_cast<int>(tau.size());
  if (k > m) throw std::invalid_argument("lemma1_instance: k > m");
  Election e;
  e.m = m;
  e.votes = {identity_vote(m), identity_vote(m), tau};
  Configuration c;
  c.k = k;
  c.orders = {identity_vote(k), identity_vote(k), pi};
  return {e, c};
}

}  // namespace sp
