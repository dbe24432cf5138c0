#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "softgt/errors.hpp"
#include "softgt/gt_space.hpp"
#include "softgt/soft_core.hpp"

namespace softgt {

/// A soft generalized topology on a carrier soft set.
///
/// The space is held through a soft basis: the opens are the soft unions of
/// basis subfamilies, S_empty included. Interior is the union of the basis
/// members inside a set; closedness and closure use the complement relative
/// to the carrier, so the carrier itself is always closed.
class SGTS {
 public:
  SGTS(SoftSet carrier, std::vector<SoftSet> basis) : carrier_(std::move(carrier)) {
    for (auto& b : basis) {
      if (!same_frame(b.frame_ptr(), carrier_.frame_ptr())) {
        throw StructuralError("basis member " + to_string(b) + " is over a different frame");
      }
      if (!is_soft_subset(b, carrier_)) {
        throw StructuralError("basis member " + to_string(b) + " is not a soft subset of the carrier " +
                              to_string(carrier_));
      }
      if (!b.is_empty()) basis_.push_back(std::move(b));
    }
    canonicalize(basis_);
    strong_ = interior(carrier_) == carrier_;
  }

  const SoftSet& carrier() const noexcept { return carrier_; }
  const FramePtr& frame_ptr() const noexcept { return carrier_.frame_ptr(); }
  const Frame& frame() const noexcept { return carrier_.frame(); }
  const std::vector<SoftSet>& basis() const noexcept { return basis_; }
  SoftSet empty() const { return SoftSet::empty(frame_ptr()); }

  /// The carrier is itself open.
  bool strong() const noexcept { return strong_; }

  /// Relative complement carrier \ s.
  SoftSet complement(const SoftSet& s) const {
    check(s);
    return soft_difference(carrier_, s);
  }

  SoftSet interior(const SoftSet& s) const {
    check(s);
    std::vector<PointSet> rows(s.parameter_count(), 0);
    for (const auto& b : basis_) {
      if (!is_soft_subset(b, s)) continue;
      for (std::size_t r = 0; r < rows.size(); ++r) rows[r] |= b.at(r);
    }
    return SoftSet(frame_ptr(), std::move(rows));
  }

  SoftSet closure(const SoftSet& s) const { return complement(interior(complement(s))); }

  bool is_open(const SoftSet& s) const { return interior(s) == s; }
  bool is_closed(const SoftSet& s) const { return is_open(complement(s)); }
  bool is_clopen(const SoftSet& s) const { return is_open(s) && is_closed(s); }

  /// (c(s))^o.
  SoftSet regularize(const SoftSet& s) const { return interior(closure(s)); }

  bool is_regular_open(const SoftSet& s) const { return regularize(s) == s; }
  bool is_regular_closed(const SoftSet& s) const { return closure(interior(s)) == s; }

  /// Every open soft set in canonical order. Throws ThresholdExceeded past `limit`.
  std::vector<SoftSet> opens(std::size_t limit = kOpenEnumerationLimit) const {
    std::set<SoftSet> seen{empty()};
    std::vector<SoftSet> frontier{empty()};
    while (!frontier.empty()) {
      std::vector<SoftSet> next;
      for (const auto& o : frontier) {
        for (const auto& b : basis_) {
          SoftSet u = soft_union(o, b);
          if (seen.insert(u).second) {
            if (seen.size() > limit) {
              throw ThresholdExceeded("soft generalized topology has more than " + std::to_string(limit) +
                                      " opens");
            }
            next.push_back(std::move(u));
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  /// Finite soft intersections of opens are open.
  bool is_quasi_topology() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j)
        if (!is_open(soft_intersection(basis_[i], basis_[j]))) return false;
    return true;
  }

  void check(const SoftSet& s) const {
    if (!same_frame(s.frame_ptr(), frame_ptr())) {
      throw StructuralError(to_string(s) + " is over a different frame than the space");
    }
    if (!is_soft_subset(s, carrier_)) {
      throw StructuralError(to_string(s) + " is not a soft subset of the carrier " + to_string(carrier_));
    }
  }

 private:
  SoftSet carrier_;
  std::vector<SoftSet> basis_;
  bool strong_ = false;
};

/// Smallest soft generalized topology on `carrier` containing `basis`.
inline SGTS generate_sgt(SoftSet carrier, std::vector<SoftSet> basis) {
  return SGTS(std::move(carrier), std::move(basis));
}

/// Builds a space from an explicit open family, which must already be closed
/// under unions (S_empty may be left out).
inline SGTS sgt_from_opens(SoftSet carrier, std::vector<SoftSet> opens) {
  SGTS space(carrier, opens);
  opens.push_back(space.empty());
  canonicalize(opens);
  const auto fail = [] { return StructuralError("open family is not closed under soft unions"); };
  try {
    if (space.opens(opens.size()) != opens) throw fail();
  } catch (const ThresholdExceeded&) {
    throw fail();
  }
  return space;
}

/// Open members that equal the interior of their closure, in canonical order.
inline std::vector<SoftSet> enumerate_regular_open(const SGTS& g) {
  std::vector<SoftSet> out;
  for (auto& o : g.opens())
    if (g.is_regular_open(o)) out.push_back(std::move(o));
  return out;
}

/// Subspace topology on b: traces v & b of the opens of g.
inline SGTS subspace(const SGTS& g, const SoftSet& b) {
  g.check(b);
  std::vector<SoftSet> traces;
  traces.reserve(g.basis().size());
  for (const auto& v : g.basis()) traces.push_back(soft_intersection(v, b));
  return SGTS(b, std::move(traces));
}

/// The generalized topology mu_r on X read off parameter r.
inline GTS project(const SGTS& g, std::size_t r) {
  if (r >= g.frame().parameters.size()) {
    throw StructuralError("parameter index " + std::to_string(r) + " is out of range");
  }
  SetFamily base;
  base.reserve(g.basis().size());
  for (const auto& b : g.basis()) base.push_back(b.at(r));
  return GTS(std::make_shared<const Universe>(g.frame().universe), std::move(base));
}

inline GTS project(const SGTS& g, std::string_view parameter) {
  return project(g, g.frame().parameters.index_of(parameter));
}

}  // namespace softgt
