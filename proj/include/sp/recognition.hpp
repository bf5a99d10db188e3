#pragma once

#include <optional>

#include "sp/core.hpp"

namespace sp {

// Left-to-right societal ordering of the candidates. An axis and its
// reversal are interchangeable witnesses.
using Axis = std::vector<int>;

// True iff v ranks c2 below both c1 and c3, where a orders c1 < c2 < c3.
bool has_valley(const Vote& v, const Axis& a, int c1, int c2, int c3);

bool is_sp_wrt_axis(const Vote& v, const Axis& a);
bool is_sp_wrt_axis(const Election& e, const Axis& a);

// The 2^{m-1} votes that are single-peaked w.r.t. a, in the order produced
// by choosing one of the two outermost remaining axis candidates for each
// successive bottom position.
std::vector<Vote> enumerate_sp_votes(const Axis& a);

// Reference oracle: scans all m!/2 axis representatives in lexicographic
// order and returns the first (hence lexicographically smallest) witness.
// Guarded to m <= 10.
std::optional<Axis> recognize_exhaustive(const Election& e);

// Outside-in greedy placement with backtracking; same decision as
// recognize_exhaustive but polynomial-time on typical inputs. The returned
// axis is a valid witness but not necessarily the lexicographic minimum.
std::optional<Axis> recognize_fast(const Election& e);

}  // namespace sp
