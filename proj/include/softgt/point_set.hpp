#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softgt/errors.hpp"

namespace softgt {

/// Subset of a universe of at most 64 points, bit i set iff point i is a member.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

constexpr PointSet full_set(std::size_t n) noexcept {
  return n >= 64 ? ~PointSet{0} : ((PointSet{1} << n) - 1);
}

constexpr PointSet singleton(std::size_t i) noexcept { return PointSet{1} << i; }

constexpr bool contains(PointSet s, std::size_t i) noexcept { return (s >> i) & 1U; }

constexpr bool is_subset(PointSet a, PointSet b) noexcept { return (a & ~b) == 0; }

constexpr std::size_t cardinality(PointSet s) noexcept {
  return static_cast<std::size_t>(std::popcount(s));
}

/// Calls f(i) for every member i of s in increasing order.
template <class F>
constexpr void for_each_point(PointSet s, F&& f) {
  while (s != 0) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

namespace detail {
struct UniverseTag {
  static constexpr std::string_view kind = "universe";
  static constexpr std::size_t max_size = kMaxPoints;
};
struct ParameterTag {
  static constexpr std::string_view kind = "parameter set";
  static constexpr std::size_t max_size = static_cast<std::size_t>(-1);
};
}  // namespace detail

/// A non-empty, duplicate-free, fixed-order list of identifiers.
/// The position of a name is its canonical index.
template <class Tag>
class OrderedNames {
 public:
  explicit OrderedNames(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) {
      throw StructuralError(std::string(Tag::kind) + " must not be empty");
    }
    if (names_.size() > Tag::max_size) {
      throw StructuralError(std::string(Tag::kind) + " holds " + std::to_string(names_.size()) +
                            " names, limit is " + std::to_string(Tag::max_size));
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) {
        throw StructuralError(std::string(Tag::kind) + " contains an empty name");
      }
      if (std::find(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(i), names_[i]) !=
          names_.begin() + static_cast<std::ptrdiff_t>(i)) {
        throw StructuralError("duplicate name '" + names_[i] + "' in " + std::string(Tag::kind));
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw StructuralError("unknown name '" + std::string(name) + "' in " + std::string(Tag::kind));
  }

  friend bool operator==(const OrderedNames&, const OrderedNames&) = default;

 private:
  std::vector<std::string> names_;
};

/// The initial universe X.
class Universe : public OrderedNames<detail::UniverseTag> {
 public:
  using OrderedNames::OrderedNames;

  PointSet all() const noexcept { return full_set(size()); }

  PointSet set_of(const std::vector<std::string>& members) const {
    PointSet s = 0;
    for (const auto& m : members) s |= singleton(index_of(m));
    return s;
  }

  /// Numbered universe {1, ..., n}.
  static Universe numbered(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return Universe(std::move(names));
  }
};

/// The parameter set R.
class ParameterSet : public OrderedNames<detail::ParameterTag> {
 public:
  using OrderedNames::OrderedNames;

  /// Parameters r1, ..., rp.
  static ParameterSet numbered(std::size_t p) {
    std::vector<std::string> names;
    names.reserve(p);
    for (std::size_t i = 1; i <= p; ++i) names.push_back("r" + std::to_string(i));
    return ParameterSet(std::move(names));
  }
};

/// Writes s as "{a,b,c}" in universe order.
inline std::string format_points(const Universe& universe, PointSet s) {
  std::string out = "{";
  bool first = true;
  for_each_point(s, [&](std::size_t i) {
    if (!first) out += ',';
    out += universe.name(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace softgt
