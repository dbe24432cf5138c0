#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "softgt/cover_search.hpp"
#include "softgt/errors.hpp"
#include "softgt/point_set.hpp"

namespace softgt {

/// Indexed finite family of subsets of X.
using SetFamily = std::vector<PointSet>;

/// Materializing the open family of a space stops at this many sets.
inline constexpr std::size_t kOpenEnumerationLimit = std::size_t{1} << 16;

/// A generalized topology on a finite universe, held through a base: the opens
/// are exactly the unions of base subfamilies (the empty subfamily giving the
/// empty set). Interior and closure are answered from the base, so spaces
/// whose open family is too large to list are still usable.
class GTS {
 public:
  GTS(std::shared_ptr<const Universe> universe, SetFamily base) : universe_(std::move(universe)) {
    if (!universe_) throw StructuralError("generalized topology without a universe");
    const PointSet all = universe_->all();
    for (PointSet b : base) {
      if (!is_subset(b, all)) throw StructuralError("base member escapes the universe");
      if (b != 0) base_.push_back(b);
    }
    std::sort(base_.begin(), base_.end());
    base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
  }

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept { return universe_; }
  PointSet all() const noexcept { return universe_->all(); }
  const SetFamily& base() const noexcept { return base_; }

  /// i_mu(a): union of the opens inside a.
  PointSet interior(PointSet a) const {
    check(a);
    PointSet out = 0;
    for (PointSet b : base_)
      if (is_subset(b, a)) out |= b;
    return out;
  }

  /// c_mu(a): intersection of the closed sets containing a. X is always closed.
  PointSet closure(PointSet a) const {
    check(a);
    return all() & ~interior(all() & ~a);
  }

  bool is_open(PointSet a) const { return interior(a) == a; }
  bool is_closed(PointSet a) const { return closure(a) == a; }

  /// i_mu(c_mu(a)).
  PointSet regularize(PointSet a) const { return interior(closure(a)); }

  bool is_regular_open(PointSet a) const { return regularize(a) == a; }
  bool is_regular_closed(PointSet a) const { return closure(interior(a)) == a; }

  /// X is mu-open.
  bool mu_space() const { return is_open(all()); }

  /// Every open set, ascending by bit value.
  SetFamily opens(std::size_t limit = kOpenEnumerationLimit) const {
    std::unordered_set<PointSet> seen{0};
    SetFamily frontier{0};
    while (!frontier.empty()) {
      SetFamily next;
      for (PointSet o : frontier) {
        for (PointSet b : base_) {
          const PointSet u = o | b;
          if (seen.insert(u).second) {
            if (seen.size() > limit) {
              throw ThresholdExceeded("generalized topology has more than " + std::to_string(limit) + " opens");
            }
            next.push_back(u);
          }
        }
      }
      frontier = std::move(next);
    }
    SetFamily out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  SetFamily regular_opens() const {
    SetFamily out;
    for (PointSet o : opens())
      if (is_regular_open(o)) out.push_back(o);
    return out;
  }

  /// Finite intersections of opens are open (quasi-topological space).
  bool is_quasi_topology() const {
    for (std::size_t i = 0; i < base_.size(); ++i)
      for (std::size_t j = i + 1; j < base_.size(); ++j)
        if (!is_open(base_[i] & base_[j])) return false;
    return true;
  }

 private:
  void check(PointSet a) const {
    if (!is_subset(a, all())) throw StructuralError("set escapes the universe");
  }

  std::shared_ptr<const Universe> universe_;
  SetFamily base_;
};

/// The generalized topology generated by `base`.
inline GTS generate_gt(std::shared_ptr<const Universe> universe, SetFamily base) {
  return GTS(std::move(universe), std::move(base));
}

inline GTS generate_gt(const Universe& universe, SetFamily base) {
  return GTS(std::make_shared<const Universe>(universe), std::move(base));
}

inline bool is_open_cover(const GTS& g, const SetFamily& family) {
  PointSet acc = 0;
  for (PointSet v : family) {
    if (!g.is_open(v)) return false;
    acc |= v;
  }
  return acc == g.all();
}

/// Each point has an open neighbourhood meeting finitely many members.
/// Families here are finite, so this holds as soon as every point lies in
/// some open set, which a mu-space guarantees.
inline bool is_mu_locally_finite(const GTS& g, const SetFamily& family) {
  if (!g.mu_space()) throw PreconditionError("local finiteness is defined on mu-spaces only");
  for (PointSet v : family) {
    if (!is_subset(v, g.all())) throw StructuralError("family member escapes the universe");
  }
  PointSet reachable = 0;
  for (PointSet b : g.base()) reachable |= b;
  return reachable == g.all();
}

/// `refinement` is a mu-open cover of X and each of its members sits inside
/// some member of `cover`.
inline bool is_mu_open_refinement(const GTS& g, const SetFamily& refinement, const SetFamily& cover) {
  if (!is_open_cover(g, refinement)) return false;
  return std::all_of(refinement.begin(), refinement.end(), [&](PointSet u) {
    return std::any_of(cover.begin(), cover.end(), [&](PointSet v) { return is_subset(u, v); });
  });
}

namespace detail {

inline void require_open_cover(const GTS& g, const SetFamily& cover) {
  if (!g.mu_space()) throw PreconditionError("subcovers are defined on mu-spaces only");
  if (!is_open_cover(g, cover)) throw PreconditionError("family is not a mu-open cover of X");
}

inline SubcoverResult min_cover_of_rows(const GTS& g, const SetFamily& rows) {
  CoverProblem problem(1, {g.all()});
  for (PointSet v : rows) problem.add(std::span<const PointSet>(&v, 1));
  auto found = exact_min_cover(problem);
  if (!found) throw PreconditionError("family does not cover X");
  return *found;
}

}  // namespace detail

/// Smallest subfamily of an open cover whose union is X.
inline SubcoverResult gt_minimal_subcover(const GTS& g, const SetFamily& cover) {
  detail::require_open_cover(g, cover);
  return detail::min_cover_of_rows(g, cover);
}

/// Smallest subfamily of an open cover whose regularized members cover X.
inline SubcoverResult gt_minimal_near_subcover(const GTS& g, const SetFamily& cover) {
  detail::require_open_cover(g, cover);
  SetFamily regularized;
  regularized.reserve(cover.size());
  for (PointSet v : cover) regularized.push_back(g.regularize(v));
  return detail::min_cover_of_rows(g, regularized);
}

inline std::size_t gt_minimal_subcover_size(const GTS& g, const SetFamily& cover) {
  return gt_minimal_subcover(g, cover).size;
}

inline std::size_t gt_minimal_near_subcover_size(const GTS& g, const SetFamily& cover) {
  return gt_minimal_near_subcover(g, cover).size;
}

/// Finite-scale near paracompactness: every regular-open cover is refined by
/// itself, and that refinement is mu-locally finite.
inline bool is_n_mu_paracompact_finite(const GTS& g) {
  if (!g.mu_space()) throw PreconditionError("near paracompactness is defined on mu-spaces only");
  const SetFamily regular = g.regular_opens();
  PointSet acc = 0;
  for (PointSet v : regular) acc |= v;
  if (acc != g.all()) return true;  // no regular-open cover exists
  return is_mu_open_refinement(g, regular, regular) && is_mu_locally_finite(g, regular);
}

}  // namespace softgt
