#pragma once

#include <optional>
#include <utility>

#include "sp/core.hpp"

namespace sp {

// An (l,k)-configuration: l total orders over k abstract items 1..k.
struct Configuration {
  int k = 0;
  std::vector<Vote> orders;

  int l() const { return static_cast<int>(orders.size()); }
};

// Containment witness: row i of the configuration maps to vote
// vote_of_row[i] (0-based index into the election), item x maps to
// candidate item_to_candidate[x-1].
struct ConfigWitness {
  std::vector<int> vote_of_row;
  std::vector<int> item_to_candidate;
};

// First witness in lexicographic (f,g) order, or nullopt if the election
// avoids the configuration.
std::optional<ConfigWitness> contains_configuration(const Election& e,
                                                    const Configuration& cfg);

bool avoids_all(const Election& e, const std::vector<Configuration>& cfgs);

// The four (2,4)- and eight (3,3)-configurations whose avoidance
// characterizes single-peakedness, in canonical listing order.
const std::vector<Configuration>& sp_forbidden_set();

// (abcd, bdac): the one published forbidden configuration for the
// group-separable domain.
Configuration gs_configuration();

// The 3-vote election (id, id, tau) and 3-order configuration
// (id, id, pi) whose containment relation mirrors pattern containment.
std::pair<Election, Configuration> lemma1_instance(const Vote& pi,
                                                   const Vote& tau);

}  // namespace sp
