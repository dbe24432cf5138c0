#pragma once

// Finite truncations of infinite counterexamples. An infinite space with a
// cover that has no finite subcover is represented by a sequence of finite
// spaces whose exact minimum subcover sizes grow without bound.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "softgt/cover_engine.hpp"
#include "softgt/errors.hpp"
#include "softgt/gt_space.hpp"
#include "softgt/sgt_space.hpp"

namespace softgt {

struct SoftInstance {
  SGTS space;
  SoftCover cover;
};

struct PlainInstance {
  GTS space;
  SetFamily cover;
};

using TruncationInstance = std::variant<SoftInstance, PlainInstance>;

struct TruncationFamily {
  std::string name;
  int min_index = 1;
  std::function<TruncationInstance(int)> build;
  std::function<std::size_t(int)> expected_plain;
  std::function<std::size_t(int)> expected_near;
};

namespace detail {

inline void require_range(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline FramePtr numbered_frame(int n, int p) {
  return make_frame(Universe::numbered(static_cast<std::size_t>(n)), ParameterSet::numbered(static_cast<std::size_t>(p)));
}

}  // namespace detail

/// Universe {1..n}, A-universal carrier over p parameters, basis and cover
/// {B_x : 2 <= x <= n} with B_x = {1, x} at every parameter.
inline SoftInstance family_example_ones(int n, int p = 2) {
  detail::require_range(n >= 2, "family_example_ones needs n >= 2");
  detail::require_range(p >= 1 && n <= static_cast<int>(kMaxPoints), "family_example_ones: parameter count or n out of range");
  const FramePtr frame = detail::numbered_frame(n, p);
  std::vector<SoftSet> basis;
  for (int x = 2; x <= n; ++x) basis.push_back(SoftSet::uniform(frame, singleton(0) | singleton(static_cast<std::size_t>(x - 1))));
  SGTS space(SoftSet::universal(frame), basis);
  return SoftInstance{space, validate_cover(space, basis)};
}

/// Same space as family_example_ones read with one basis set per parameter,
/// {(r, {1, x})}, covered by the displayed row pattern: row i holds
/// {1..j} and i + j at parameter r_j, clipped to {1..n}.
inline SoftInstance family_example_ones_rows(int n, int p = 2) {
  detail::require_range(n >= 2 && p >= 1 && n <= static_cast<int>(kMaxPoints), "family_example_ones_rows: range");
  const FramePtr frame = detail::numbered_frame(n, p);
  const PointSet all = full_set(static_cast<std::size_t>(n));
  std::vector<SoftSet> basis;
  for (int r = 0; r < p; ++r) {
    for (int x = 2; x <= n; ++x) {
      std::vector<PointSet> rows(static_cast<std::size_t>(p), 0);
      rows[static_cast<std::size_t>(r)] = singleton(0) | singleton(static_cast<std::size_t>(x - 1));
      basis.emplace_back(frame, std::move(rows));
    }
  }
  SGTS space(SoftSet::universal(frame), basis);
  std::vector<SoftSet> cover;
  for (int i = 1; i <= n; ++i) {
    std::vector<PointSet> rows(static_cast<std::size_t>(p));
    for (int j = 1; j <= p; ++j) {
      PointSet row = full_set(static_cast<std::size_t>(j));
      if (i + j <= n) row |= singleton(static_cast<std::size_t>(i + j - 1));
      rows[static_cast<std::size_t>(j - 1)] = row & all;
    }
    SoftSet s(frame, std::move(rows));
    if (space.is_open(s)) cover.push_back(std::move(s));
  }
  return SoftInstance{space, validate_cover(space, cover)};
}

/// Universe {1..2m}, base of consecutive pairs {k, k+1}, distinguished cover
/// of odd pairs {2j-1, 2j}.
inline PlainInstance family_pairs(int m) {
  detail::require_range(m >= 1 && 2 * m <= static_cast<int>(kMaxPoints), "family_pairs needs 1 <= m <= 32");
  auto universe = std::make_shared<const Universe>(Universe::numbered(static_cast<std::size_t>(2 * m)));
  SetFamily base;
  for (int k = 1; k <= 2 * m - 1; ++k) base.push_back(singleton(static_cast<std::size_t>(k - 1)) | singleton(static_cast<std::size_t>(k)));
  GTS space(universe, base);
  SetFamily cover;
  for (int j = 1; j <= m; ++j) cover.push_back(singleton(static_cast<std::size_t>(2 * j - 2)) | singleton(static_cast<std::size_t>(2 * j - 1)));
  return PlainInstance{space, cover};
}

/// Universe {1..n} with the discrete soft topology generated by the single
/// pairs (r, {x}). The cover is the row pattern: row i holds {i} at r_1 and
/// {1..j-1} together with i + j - 1 at r_j, clipped to {1..n}.
inline SoftInstance family_discrete_subspace(int n, int p = 2) {
  detail::require_range(n >= 1 && p >= 1 && n <= static_cast<int>(kMaxPoints), "family_discrete_subspace: range");
  const FramePtr frame = detail::numbered_frame(n, p);
  const PointSet all = full_set(static_cast<std::size_t>(n));
  std::vector<SoftSet> basis;
  for (int r = 0; r < p; ++r) {
    for (int x = 0; x < n; ++x) {
      std::vector<PointSet> rows(static_cast<std::size_t>(p), 0);
      rows[static_cast<std::size_t>(r)] = singleton(static_cast<std::size_t>(x));
      basis.emplace_back(frame, std::move(rows));
    }
  }
  SGTS space(SoftSet::universal(frame), basis);
  std::vector<SoftSet> cover;
  for (int i = 1; i <= n; ++i) {
    std::vector<PointSet> rows(static_cast<std::size_t>(p));
    for (int j = 1; j <= p; ++j) {
      PointSet row = full_set(static_cast<std::size_t>(j - 1));
      if (i + j - 1 <= n) row |= singleton(static_cast<std::size_t>(i + j - 2));
      rows[static_cast<std::size_t>(j - 1)] = row & all;
    }
    SoftSet s(frame, std::move(rows));
    if (!s.is_empty()) cover.push_back(std::move(s));
  }
  return SoftInstance{space, validate_cover(space, cover)};
}

inline TruncationFamily example_ones_family(int p = 2) {
  return {"family_example_ones", 2, [p](int n) -> TruncationInstance { return family_example_ones(n, p); },
          [](int n) { return static_cast<std::size_t>(n - 1); }, [](int) { return std::size_t{1}; }};
}

inline TruncationFamily pairs_family() {
  return {"family_pairs", 1, [](int m) -> TruncationInstance { return family_pairs(m); },
          [](int m) { return static_cast<std::size_t>(m); }, [](int m) { return static_cast<std::size_t>(m); }};
}

inline TruncationFamily discrete_subspace_family(int p = 2) {
  return {"family_discrete_subspace", 1, [p](int n) -> TruncationInstance { return family_discrete_subspace(n, p); },
          [](int n) { return static_cast<std::size_t>(n); }, [](int n) { return static_cast<std::size_t>(n); }};
}

/// Negative control: the cover is {carrier} at every size.
inline TruncationFamily constant_family(int p = 1) {
  return {"family_constant", 1,
          [p](int n) -> TruncationInstance {
            const FramePtr frame = detail::numbered_frame(n, p);
            SGTS space(SoftSet::universal(frame), {SoftSet::universal(frame)});
            return SoftInstance{space, validate_cover(space, {space.carrier()})};
          },
          [](int) { return std::size_t{1}; }, [](int) { return std::size_t{1}; }};
}

inline std::vector<std::string> truncation_family_names() {
  return {"family_example_ones", "family_pairs", "family_discrete_subspace", "family_constant"};
}

inline TruncationFamily truncation_family(const std::string& name, int p = 2) {
  if (name == "family_example_ones") return example_ones_family(p);
  if (name == "family_pairs") return pairs_family();
  if (name == "family_discrete_subspace") return discrete_subspace_family(p);
  if (name == "family_constant") return constant_family(p);
  throw StructuralError("unknown truncation family '" + name + "'");
}

struct GrowthSample {
  int index = 0;
  std::size_t plain = 0;
  std::size_t near = 0;
  std::size_t expected_plain = 0;
  std::size_t expected_near = 0;
  std::vector<std::size_t> plain_witness;
  std::vector<std::size_t> near_witness;
};

struct GrowthCertificate {
  std::string family;
  int min_index = 0;
  int max_index = 0;
  std::vector<GrowthSample> samples;
  bool plain_unbounded = false;  // strictly increasing at every sampled step
  bool near_unbounded = false;
  bool near_bounded = false;     // constant over the sample
  std::string conclusion;
};

namespace detail {

inline bool strictly_increasing(const std::vector<std::size_t>& xs) {
  if (xs.size() < 2) return false;
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] <= xs[i - 1]) return false;
  return true;
}

inline bool constant(const std::vector<std::size_t>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] != xs[0]) return false;
  return true;
}

}  // namespace detail

/// Computes exact plain and near minimum subcover sizes of the distinguished
/// cover for every index in [family.min_index, n_max] and checks them against
/// the family's expected growth laws. Throws CertificationFailure on the first
/// mismatch.
inline GrowthCertificate growth_certificate(const TruncationFamily& family, int n_max) {
  if (n_max < family.min_index) {
    throw PreconditionError(family.name + ": n_max must be at least " + std::to_string(family.min_index));
  }
  GrowthCertificate cert;
  cert.family = family.name;
  cert.min_index = family.min_index;
  cert.max_index = n_max;
  std::vector<std::size_t> plain, near;
  for (int n = family.min_index; n <= n_max; ++n) {
    GrowthSample s;
    s.index = n;
    s.expected_plain = family.expected_plain(n);
    s.expected_near = family.expected_near(n);
    const TruncationInstance inst = family.build(n);
    if (const auto* soft = std::get_if<SoftInstance>(&inst)) {
      auto pr = minimal_subcover(soft->cover);
      auto nr = minimal_near_subcover(soft->cover);
      s.plain = pr.size, s.plain_witness = std::move(pr.indices);
      s.near = nr.size, s.near_witness = std::move(nr.indices);
    } else {
      const auto& plain_inst = std::get<PlainInstance>(inst);
      auto pr = gt_minimal_subcover(plain_inst.space, plain_inst.cover);
      auto nr = gt_minimal_near_subcover(plain_inst.space, plain_inst.cover);
      s.plain = pr.size, s.plain_witness = std::move(pr.indices);
      s.near = nr.size, s.near_witness = std::move(nr.indices);
    }
    if (s.plain != s.expected_plain) {
      throw CertificationFailure(family.name, n,
                                 "minimum subcover " + std::to_string(s.plain) + ", expected " + std::to_string(s.expected_plain));
    }
    if (s.near != s.expected_near) {
      throw CertificationFailure(family.name, n,
                                 "minimum near-subcover " + std::to_string(s.near) + ", expected " + std::to_string(s.expected_near));
    }
    plain.push_back(s.plain);
    near.push_back(s.near);
    cert.samples.push_back(std::move(s));
  }
  cert.plain_unbounded = detail::strictly_increasing(plain);
  cert.near_unbounded = detail::strictly_increasing(near);
  cert.near_bounded = detail::constant(near);
  if (cert.near_unbounded) {
    cert.conclusion = "near-subcover size grows at every step: not nearly compact in the limit";
  } else if (cert.plain_unbounded && cert.near_bounded) {
    cert.conclusion =
        "subcover size grows at every step while the near-subcover size stays constant: "
        "not compact in the limit, nearly compact at every truncation";
  } else {
    cert.conclusion = "no unbounded growth certified";
  }
  return cert;
}

}  // namespace softgt
