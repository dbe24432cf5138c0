#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softgt/errors.hpp"
#include "softgt/point_set.hpp"

namespace softgt {

/// The pair (X, R) every soft set is defined over.
struct Frame {
  Universe universe;
  ParameterSet parameters;

  friend bool operator==(const Frame&, const Frame&) = default;
};

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr make_frame(Universe universe, ParameterSet parameters) {
  return std::make_shared<const Frame>(Frame{std::move(universe), std::move(parameters)});
}

inline FramePtr make_frame(std::vector<std::string> points, std::vector<std::string> parameters) {
  return make_frame(Universe(std::move(points)), ParameterSet(std::move(parameters)));
}

inline bool same_frame(const FramePtr& a, const FramePtr& b) {
  return a == b || (a && b && *a == *b);
}

/// A soft set: a total map from parameters to subsets of the universe, stored
/// as one bit row per parameter. Parameters outside the support carry the
/// empty row. Immutable.
class SoftSet {
 public:
  SoftSet(FramePtr frame, std::vector<PointSet> rows) : frame_(std::move(frame)), rows_(std::move(rows)) {
    if (!frame_) throw StructuralError("soft set without a frame");
    if (rows_.size() != frame_->parameters.size()) {
      throw StructuralError("soft set has " + std::to_string(rows_.size()) + " rows but the frame has " +
                            std::to_string(frame_->parameters.size()) + " parameters");
    }
    const PointSet all = frame_->universe.all();
    for (PointSet row : rows_) {
      if (!is_subset(row, all)) throw StructuralError("soft set row escapes the universe");
    }
  }

  /// S_empty.
  static SoftSet empty(FramePtr frame) {
    const std::size_t p = frame->parameters.size();
    return SoftSet(std::move(frame), std::vector<PointSet>(p, 0));
  }

  /// The A-universal soft set: X at every parameter of the support, empty elsewhere.
  static SoftSet a_universal(FramePtr frame, std::span<const std::size_t> support) {
    std::vector<PointSet> rows(frame->parameters.size(), 0);
    for (std::size_t r : support) rows.at(r) = frame->universe.all();
    return SoftSet(std::move(frame), std::move(rows));
  }

  /// S_R-hat: X at every parameter.
  static SoftSet universal(FramePtr frame) {
    const std::size_t p = frame->parameters.size();
    const PointSet all = frame->universe.all();
    return SoftSet(std::move(frame), std::vector<PointSet>(p, all));
  }

  /// The same subset at every parameter.
  static SoftSet uniform(FramePtr frame, PointSet row) {
    const std::size_t p = frame->parameters.size();
    return SoftSet(std::move(frame), std::vector<PointSet>(p, row));
  }

  const FramePtr& frame_ptr() const noexcept { return frame_; }
  const Frame& frame() const noexcept { return *frame_; }
  std::size_t parameter_count() const noexcept { return rows_.size(); }

  PointSet at(std::size_t r) const { return rows_.at(r); }
  PointSet at(std::string_view parameter) const { return rows_[frame_->parameters.index_of(parameter)]; }
  std::span<const PointSet> rows() const noexcept { return rows_; }

  bool is_empty() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [](PointSet r) { return r == 0; });
  }

  /// Number of (parameter, point) pairs.
  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (PointSet r : rows_) w += cardinality(r);
    return w;
  }

  /// Support set A: parameters with a non-empty row.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r] != 0) out.push_back(r);
    return out;
  }

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.rows_ == b.rows_ && same_frame(a.frame_, b.frame_);
  }

  /// Canonical order: lexicographic on rows. Only meaningful within one frame.
  friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) { return a.rows_ <=> b.rows_; }

 private:
  FramePtr frame_;
  std::vector<PointSet> rows_;
};

namespace detail {

inline void require_same_frame(const SoftSet& s, const SoftSet& t, std::string_view op) {
  if (!same_frame(s.frame_ptr(), t.frame_ptr())) {
    throw StructuralError(std::string(op) + ": operands are over different universes or parameter sets");
  }
}

template <class Combine>
SoftSet zip_rows(const SoftSet& s, const SoftSet& t, std::string_view op, Combine combine) {
  require_same_frame(s, t, op);
  std::vector<PointSet> rows(s.parameter_count());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = combine(s.at(r), t.at(r));
  return SoftSet(s.frame_ptr(), std::move(rows));
}

}  // namespace detail

inline SoftSet soft_union(const SoftSet& s, const SoftSet& t) {
  return detail::zip_rows(s, t, "soft_union", [](PointSet a, PointSet b) { return a | b; });
}

inline SoftSet soft_intersection(const SoftSet& s, const SoftSet& t) {
  return detail::zip_rows(s, t, "soft_intersection", [](PointSet a, PointSet b) { return a & b; });
}

inline SoftSet soft_difference(const SoftSet& s, const SoftSet& t) {
  return detail::zip_rows(s, t, "soft_difference", [](PointSet a, PointSet b) { return a & ~b; });
}

/// Absolute complement: X minus the row, at every parameter.
inline SoftSet soft_complement(const SoftSet& s) {
  const PointSet all = s.frame().universe.all();
  std::vector<PointSet> rows(s.parameter_count());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = all & ~s.at(r);
  return SoftSet(s.frame_ptr(), std::move(rows));
}

/// s is a soft subset of t: s(r) is contained in t(r) for every parameter.
inline bool is_soft_subset(const SoftSet& s, const SoftSet& t) {
  detail::require_same_frame(s, t, "is_soft_subset");
  for (std::size_t r = 0; r < s.parameter_count(); ++r)
    if (!is_subset(s.at(r), t.at(r))) return false;
  return true;
}

/// x belongs to s at every parameter.
inline bool is_soft_point(std::size_t x, const SoftSet& s) {
  if (x >= s.frame().universe.size()) {
    throw StructuralError("point index " + std::to_string(x) + " is not in the universe");
  }
  for (PointSet row : s.rows())
    if (!contains(row, x)) return false;
  return true;
}

inline bool is_soft_point(std::string_view x, const SoftSet& s) {
  return is_soft_point(s.frame().universe.index_of(x), s);
}

/// Union of a family; the empty family gives S_empty.
inline SoftSet soft_union_all(const FramePtr& frame, std::span<const SoftSet> family) {
  std::vector<PointSet> rows(frame->parameters.size(), 0);
  for (const auto& s : family) {
    if (!same_frame(s.frame_ptr(), frame)) throw StructuralError("soft_union_all: mixed frames");
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] |= s.at(r);
  }
  return SoftSet(frame, std::move(rows));
}

/// Textual form "{(r1,{a,b}),(r2,{c})}". Parameters with an empty row are not shown.
inline std::string to_string(const SoftSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t r = 0; r < s.parameter_count(); ++r) {
    if (s.at(r) == 0) continue;
    if (!first) out += ',';
    out += '(' + s.frame().parameters.name(r) + ',' + format_points(s.frame().universe, s.at(r)) + ')';
    first = false;
  }
  out += '}';
  return out;
}

/// Sorts a family into canonical order and removes duplicates.
inline void canonicalize(std::vector<SoftSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace softgt
