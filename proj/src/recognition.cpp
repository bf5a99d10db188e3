#include "sp/recognition.hpp"

#include <algorithm>
#include <limits>

namespace sp {

bool has_valley(const Vote& v, const Axis& a, int c1, int c2, int c3) {
  const auto ra = rank_of(a);
  if (!(ra[c1 - 1] < ra[c2 - 1] && ra[c2 - 1] < ra[c3 - 1]))
    throw std::invalid_argument("has_valley: candidates not in axis order");
  const auto rv = rank_of(v);
  return rv[c2 - 1] > rv[c1 - 1] && rv[c2 - 1] > rv[c3 - 1];
}

// A vote has no valley w.r.t. a iff each of its top-k prefixes occupies a
// contiguous interval of the axis.
bool is_sp_wrt_axis(const Vote& v, const Axis& a) {
  if (v.size() != a.size())
    throw std::invalid_argument("is_sp_wrt_axis: mismatched candidate counts");
  const auto ra = rank_of(a);
  int lo = ra[v[0] - 1], hi = lo;
  for (int k = 1; k < static_cast<int>(v.size()); ++k) {
    const int p = ra[v[k] - 1];
    lo = std::min(lo, p);
    hi = std::max(hi, p);
    if (hi - lo != k) return false;
  }
  return true;
}

bool is_sp_wrt_axis(const Election& e, const Axis& a) {
  for (const Vote& v : e.votes)
    if (!is_sp_wrt_axis(v, a)) return false;
  return true;
}

namespace {

void build_sp_votes(const Axis& a, int lo, int hi, Vote& tail,
                    std::vector<Vote>& out) {
  if (lo == hi) {
    Vote v;
    v.push_back(a[lo]);
    v.insert(v.end(), tail.rbegin(), tail.rend());
    out.push_back(std::move(v));
    return;
  }
  tail.push_back(a[lo]);
  build_sp_votes(a, lo + 1, hi, tail, out);
  tail.back() = a[hi];
  build_sp_votes(a, lo, hi - 1, tail, out);
  tail.pop_back();
}

}  // namespace

std::vector<Vote> enumerate_sp_votes(const Axis& a) {
  std::vector<Vote> out;
  Vote tail;  // bottom-up choices so far
  build_sp_votes(a, 0, static_cast<int>(a.size()) - 1, tail, out);
  return out;
}

std::optional<Axis> recognize_exhaustive(const Election& e) {
  validate_election(e);
  if (e.m > 10)
    throw capability_error("recognize_exhaustive: m > 10");
  Axis a = identity_vote(e.m);
  do {
    if (e.m >= 2 && reverse(a) < a) continue;  // one representative per pair
    if (is_sp_wrt_axis(e, a)) return a;
  } while (std::next_permutation(a.begin(), a.end()));
  return std::nullopt;
}

namespace {

// Places candidates onto the axis from the outside in. At each step the
// candidates that are bottom-ranked among the remaining set in some vote
// must occupy the outermost open slots; there can be at most two of them
// or no axis exists.
class FastRecognizer {
 public:
  explicit FastRecognizer(const Election& e)
      : m_(e.m), n_(e.n()), axis_(e.m, 0), in_r_(e.m + 1, true) {
    ranks_.reserve(n_);
    for (const Vote& v : e.votes) ranks_.push_back(rank_of(v));
    best_left_.assign(n_, std::numeric_limits<int>::max());
    best_right_.assign(n_, std::numeric_limits<int>::max());
  }

  std::optional<Axis> run() {
    if (solve(0, m_ - 1, m_)) return axis_;
    return std::nullopt;
  }

 private:
  // Placing c at an end is invalid iff in some vote a candidate already
  // placed further out on the same side is preferred to c while c is not
  // the worst among everything that will end up on its inner side.
  bool placement_ok(int c, bool left) const {
    const auto& outer = left ? best_left_ : best_right_;
    const auto& other = left ? best_right_ : best_left_;
    for (int i = 0; i < n_; ++i) {
      const int rc = ranks_[i][c - 1];
      if (outer[i] >= rc) continue;  // nothing outer of c is preferred to c
      if (other[i] < rc) return false;
      for (int d = 1; d <= m_; ++d)
        if (d != c && in_r_[d] && ranks_[i][d - 1] < rc) return false;
    }
    return true;
  }

  bool place(int c, int slot, bool left, std::vector<int>& saved) {
    if (!placement_ok(c, left)) return false;
    axis_[slot] = c;
    in_r_[c] = false;
    auto& best = left ? best_left_ : best_right_;
    saved.clear();
    for (int i = 0; i < n_; ++i) {
      saved.push_back(best[i]);
      best[i] = std::min(best[i], ranks_[i][c - 1]);
    }
    return true;
  }

  void unplace(int c, int slot, bool left, const std::vector<int>& saved) {
    axis_[slot] = 0;
    in_r_[c] = true;
    auto& best = left ? best_left_ : best_right_;
    for (int i = 0; i < n_; ++i) best[i] = saved[i];
  }

  bool solve(int left_slot, int right_slot, int remaining) {
    if (remaining == 0) return true;
    // Bottom-ranked candidates within the remaining set, per vote.
    int b1 = 0, b2 = 0;
    for (int i = 0; i < n_; ++i) {
      int worst = 0, wr = -1;
      for (int d = 1; d <= m_; ++d)
        if (in_r_[d] && ranks_[i][d - 1] > wr) wr = ranks_[i][d - 1], worst = d;
      if (worst == b1 || worst == b2) continue;
      if (b1 == 0)
        b1 = worst;
      else if (b2 == 0)
        b2 = worst;
      else
        return false;  // three distinct bottom candidates
    }
    std::vector<int> s1, s2;
    if (b2 != 0) {
      for (int swap = 0; swap < 2; ++swap) {
        const int cl = swap ? b2 : b1, cr = swap ? b1 : b2;
        if (place(cl, left_slot, true, s1)) {
          if (place(cr, right_slot, false, s2)) {
            if (solve(left_slot + 1, right_slot - 1, remaining - 2)) return true;
            unplace(cr, right_slot, false, s2);
          }
          unplace(cl, left_slot, true, s1);
        }
      }
      return false;
    }
    if (remaining == 1) {
      if (place(b1, left_slot, true, s1)) return true;
      return false;
    }
    for (int side = 0; side < 2; ++side) {
      const bool left = side == 0;
      const int slot = left ? left_slot : right_slot;
      if (place(b1, slot, left, s1)) {
        if (solve(left_slot + (left ? 1 : 0), right_slot - (left ? 0 : 1),
                  remaining - 1))
          return true;
        unplace(b1, slot, left, s1);
      }
    }
    return false;
  }

  int m_, n_;
  std::vector<std::vector<int>> ranks_;
  Axis axis_;
  std::vector<bool> in_r_;              // 1-based candidate -> still unplaced
  std::vector<int> best_left_, best_right_;  // per vote, best rank placed on side
};

}  // namespace

std::optional<Axis> recognize_fast(const Election& e) {
  validate_election(e);
  if (e.n() == 1 || e.m <= 2) return Axis(e.votes[0]);
  FastRecognizer rec(e);
  auto axis = rec.run();
  if (axis && !is_sp_wrt_axis(e, *axis))
    throw std::logic_error("recognize_fast produced an invalid witness");
  // An axis and its reversal are interchangeable; return the orientation
  // that starts with the smaller endpoint.
  if (axis && axis->back() < axis->front())
    std::reverse(axis->begin(), axis->end());
  return axis;
}

}  // namespace sp
