#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "softgt/gt_space.hpp"
#include "softgt/sgt_space.hpp"
#include "softgt/soft_core.hpp"

namespace softgt {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20161118;

/// Size limits for generated instances.
struct InstanceShape {
  std::size_t max_points = 5;
  std::size_t max_parameters = 3;
  std::size_t max_basis = 6;
};

/// How basis members of A-universal instances are drawn.
enum class BasisStyle {
  general,        // arbitrary soft subsets of the carrier
  per_parameter,  // each member is supported on a single parameter
};

namespace detail {

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline PointSet random_subset(Rng& rng, PointSet of) {
  return std::uniform_int_distribution<PointSet>(0, ~PointSet{0})(rng) & of;
}

inline FramePtr random_frame(Rng& rng, const InstanceShape& shape) {
  return make_frame(Universe::numbered(uniform_index(rng, 1, shape.max_points)),
                    ParameterSet::numbered(uniform_index(rng, 1, shape.max_parameters)));
}

inline SoftSet random_soft_subset(Rng& rng, const SoftSet& of) {
  std::vector<PointSet> rows(of.parameter_count());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = random_subset(rng, of.at(r));
  return SoftSet(of.frame_ptr(), std::move(rows));
}

}  // namespace detail

/// A random soft subset of `of`.
inline SoftSet random_soft_subset(Rng& rng, const SoftSet& of) { return detail::random_soft_subset(rng, of); }

/// A random strong soft generalized topology within `shape`. The carrier is
/// either shrunk to the union of the basis or added to the basis.
inline SGTS random_strong_sgts(Rng& rng, const InstanceShape& shape = {}) {
  const FramePtr frame = detail::random_frame(rng, shape);
  std::vector<PointSet> carrier_rows(frame->parameters.size());
  for (auto& row : carrier_rows) row = detail::random_subset(rng, frame->universe.all());
  if (std::all_of(carrier_rows.begin(), carrier_rows.end(), [](PointSet r) { return r == 0; })) {
    carrier_rows[0] = frame->universe.all();
  }
  SoftSet carrier(frame, carrier_rows);

  const std::size_t k = detail::uniform_index(rng, 1, shape.max_basis);
  std::vector<SoftSet> basis;
  for (std::size_t i = 0; i < k; ++i) basis.push_back(detail::random_soft_subset(rng, carrier));
  const SoftSet covered = soft_union_all(frame, basis);
  if (covered != carrier) {
    if (covered.is_empty() || detail::uniform_index(rng, 0, 1) == 0) {
      basis.back() = carrier;
    } else {
      carrier = covered;
    }
  }
  return SGTS(carrier, std::move(basis));
}

/// A random strong space whose carrier is X at every parameter.
inline SGTS random_a_universal_sgts(Rng& rng, BasisStyle style, const InstanceShape& shape = {}) {
  const FramePtr frame = detail::random_frame(rng, shape);
  const SoftSet carrier = SoftSet::universal(frame);
  const std::size_t p = frame->parameters.size();
  const std::size_t k = detail::uniform_index(rng, 1, shape.max_basis);
  std::vector<SoftSet> basis;
  for (std::size_t i = 0; i < k; ++i) {
    if (style == BasisStyle::general) {
      basis.push_back(detail::random_soft_subset(rng, carrier));
    } else {
      std::vector<PointSet> rows(p, 0);
      rows[detail::uniform_index(rng, 0, p - 1)] = detail::random_subset(rng, frame->universe.all());
      basis.emplace_back(frame, std::move(rows));
    }
  }
  // Strong: the carrier is open.
  if (style == BasisStyle::general) {
    basis.push_back(carrier);
  } else {
    for (std::size_t r = 0; r < p; ++r) {
      std::vector<PointSet> rows(p, 0);
      rows[r] = frame->universe.all();
      basis.emplace_back(frame, std::move(rows));
    }
  }
  return SGTS(carrier, std::move(basis));
}

/// A random mu-space on at most `max_points` points.
inline GTS random_mu_space(Rng& rng, std::size_t max_points = 5, std::size_t max_base = 6) {
  auto universe = std::make_shared<const Universe>(Universe::numbered(detail::uniform_index(rng, 1, max_points)));
  const std::size_t k = detail::uniform_index(rng, 1, max_base);
  SetFamily base;
  for (std::size_t i = 0; i < k; ++i) base.push_back(detail::random_subset(rng, universe->all()));
  PointSet covered = 0;
  for (PointSet b : base) covered |= b;
  if (covered != universe->all()) base.back() = universe->all();
  return GTS(universe, std::move(base));
}

}  // namespace softgt
