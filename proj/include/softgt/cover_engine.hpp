#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softgt/cover_search.hpp"
#include "softgt/errors.hpp"
#include "softgt/sgt_space.hpp"
#include "softgt/soft_core.hpp"

namespace softgt {

/// A validated soft mu-open cover of a strong space's carrier.
struct SoftCover {
  SGTS space;
  std::vector<SoftSet> members;
};

enum class CoverDefect { none, not_strong, foreign_member, non_open_member, uncovered };

/// Why a family fails to be a soft mu-open cover. Only the first defect found
/// is reported.
struct CoverDiagnosis {
  CoverDefect defect = CoverDefect::none;
  std::size_t member = 0;     // offending member for foreign_member / non_open_member
  std::size_t parameter = 0;  // first uncovered (parameter, point) pair
  std::size_t point = 0;

  bool ok() const noexcept { return defect == CoverDefect::none; }

  std::string describe(const Frame& frame) const {
    switch (defect) {
      case CoverDefect::none:
        return "valid cover";
      case CoverDefect::not_strong:
        return "space is not strong: the carrier is not soft mu-open";
      case CoverDefect::foreign_member:
        return "member " + std::to_string(member) + " is not a soft subset of the carrier";
      case CoverDefect::non_open_member:
        return "member " + std::to_string(member) + " is not soft mu-open";
      case CoverDefect::uncovered:
        return "point " + frame.universe.name(point) + " at parameter " + frame.parameters.name(parameter) +
               " is not covered";
    }
    return {};
  }
};

class InvalidCover : public PreconditionError {
 public:
  InvalidCover(CoverDiagnosis diagnosis, const std::string& what)
      : PreconditionError(what), diagnosis_(diagnosis) {}

  const CoverDiagnosis& diagnosis() const noexcept { return diagnosis_; }

 private:
  CoverDiagnosis diagnosis_;
};

inline CoverDiagnosis diagnose_cover(const SGTS& space, const std::vector<SoftSet>& members) {
  CoverDiagnosis d;
  if (!space.strong()) {
    d.defect = CoverDefect::not_strong;
    return d;
  }
  std::vector<PointSet> acc(space.frame().parameters.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const SoftSet& m = members[i];
    if (!same_frame(m.frame_ptr(), space.frame_ptr()) || !is_soft_subset(m, space.carrier())) {
      d.defect = CoverDefect::foreign_member;
      d.member = i;
      return d;
    }
    if (!space.is_open(m)) {
      d.defect = CoverDefect::non_open_member;
      d.member = i;
      return d;
    }
    for (std::size_t r = 0; r < acc.size(); ++r) acc[r] |= m.at(r);
  }
  for (std::size_t r = 0; r < acc.size(); ++r) {
    const PointSet missing = space.carrier().at(r) & ~acc[r];
    if (missing != 0) {
      d.defect = CoverDefect::uncovered;
      d.parameter = r;
      d.point = static_cast<std::size_t>(std::countr_zero(missing));
      return d;
    }
  }
  return d;
}

inline SoftCover validate_cover(const SGTS& space, std::vector<SoftSet> members) {
  const CoverDiagnosis d = diagnose_cover(space, members);
  if (!d.ok()) throw InvalidCover(d, "not a soft mu-open cover: " + d.describe(space.frame()));
  return SoftCover{space, std::move(members)};
}

namespace detail {

inline CoverProblem soft_problem(const SoftSet& target, const std::vector<SoftSet>& rows) {
  CoverProblem problem(target.parameter_count(), {target.rows().begin(), target.rows().end()});
  for (const auto& s : rows) problem.add(s.rows());
  return problem;
}

inline SubcoverResult require_found(std::optional<SubcoverResult> r) {
  if (!r) throw PreconditionError("family does not cover the carrier");
  return std::move(*r);
}

}  // namespace detail

/// Smallest subfamily of the cover whose union is the carrier.
inline SubcoverResult minimal_subcover(const SoftCover& c) {
  return detail::require_found(exact_min_cover(detail::soft_problem(c.space.carrier(), c.members)));
}

/// Smallest subfamily whose members' (c(.))^o cover the carrier.
inline SubcoverResult minimal_near_subcover(const SoftCover& c) {
  std::vector<SoftSet> regularized;
  regularized.reserve(c.members.size());
  for (const auto& m : c.members) regularized.push_back(c.space.regularize(m));
  return detail::require_found(exact_min_cover(detail::soft_problem(c.space.carrier(), regularized)));
}

/// Outcome of the finite-scale soft nearly mu-compactness decision.
///
/// Every cover of a finite space is finite, so both verdicts are always true
/// and `finite_trivial` says so. The sizes are the informative part: each is
/// the worst case, over all covers of the stated kind, of the minimum number
/// of members needed.
struct CompactnessReport {
  bool compact = false;            // every regular-open cover has a finite subcover
  bool near_formulation = false;   // every open cover has a finite near-subcover
  bool formulations_agree = false;
  bool finite_trivial = true;
  bool regular_open_cover_flag = false;  // the regular-open sets cover the carrier

  std::size_t open_count = 0;
  std::size_t regular_open_count = 0;

  std::size_t plain_minimal_subcover_size = 0;    // over open covers
  std::size_t near_minimal_subcover_size = 0;     // over open covers, counting (c(.))^o
  std::size_t regular_minimal_subcover_size = 0;  // over regular-open covers

  std::vector<std::size_t> plain_witness;    // indices into g.opens()
  std::vector<std::size_t> near_witness;     // indices into g.opens()
  std::vector<std::size_t> regular_witness;  // indices into enumerate_regular_open(g)
};

/// Decides soft nearly mu-compactness of a finite strong space through both
/// formulations and measures how many members covers need.
///
/// The regular-open route takes the largest irredundant cover drawn from the
/// regular-open sets. The near route visits every irredundant open cover and
/// solves its near-subcover problem. The two sizes coincide: the regularized
/// image of an open cover is a regular-open cover, and a regular-open cover is
/// its own image. `formulations_agree` records that they did.
inline CompactnessReport is_soft_n_mu_compact_finite(const SGTS& g) {
  if (!g.strong()) throw PreconditionError("soft near compactness is defined on strong spaces only");
  CompactnessReport report;

  const std::vector<SoftSet> opens = g.opens();
  std::vector<SoftSet> regular;
  std::vector<SoftSet> regularized;
  regularized.reserve(opens.size());
  for (const auto& o : opens) {
    regularized.push_back(g.regularize(o));
    if (regularized.back() == o) regular.push_back(o);
  }
  report.open_count = opens.size();
  report.regular_open_count = regular.size();

  const CoverProblem open_problem = detail::soft_problem(g.carrier(), opens);
  const auto plain = detail::require_found(max_irredundant_cover(open_problem));
  report.plain_minimal_subcover_size = plain.size;
  report.plain_witness = plain.indices;

  const CoverProblem regular_problem = detail::soft_problem(g.carrier(), regular);
  if (auto r = max_irredundant_cover(regular_problem)) {
    report.regular_open_cover_flag = true;
    report.regular_minimal_subcover_size = r->size;
    report.regular_witness = r->indices;
  }

  std::optional<SubcoverResult> worst_near;
  for_each_irredundant_cover(open_problem, [&](std::span<const std::size_t> indices) {
    std::vector<SoftSet> image;
    image.reserve(indices.size());
    for (std::size_t i : indices) image.push_back(regularized[i]);
    const auto near = detail::require_found(exact_min_cover(detail::soft_problem(g.carrier(), image)));
    if (!worst_near || near.size > worst_near->size) {
      worst_near = SubcoverResult{near.size, {indices.begin(), indices.end()}};
    }
  });
  report.near_minimal_subcover_size = worst_near ? worst_near->size : 0;
  report.near_witness = worst_near ? worst_near->indices : std::vector<std::size_t>{};

  // Finite families only: every cover is its own finite subcover.
  report.compact = true;
  report.near_formulation = true;
  report.formulations_agree = report.compact == report.near_formulation &&
                              report.regular_minimal_subcover_size == report.near_minimal_subcover_size;
  return report;
}

/// Relative complements carrier \ s of a family.
inline std::vector<SoftSet> relative_complements(const SGTS& g, const std::vector<SoftSet>& family) {
  std::vector<SoftSet> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(g.complement(s));
  return out;
}

/// Families larger than this are not enumerated for the finite intersection property.
inline constexpr std::size_t kFipEnumerationLimit = 20;

struct FipVerdict {
  bool fip_holds = false;                   // every non-empty subfamily meets
  std::vector<std::size_t> empty_subfamily;  // first subfamily with empty intersection
  SoftSet total_intersection;
  bool total_nonempty = false;
  bool space_n_mu_compact = false;
  bool consistent = false;                  // fip and compact imply a non-empty total intersection
};

/// Checks a family of soft mu-regular closed sets for the finite intersection
/// property and for a non-empty total intersection.
inline FipVerdict fip_nonempty_intersection_check(const SGTS& g, const std::vector<SoftSet>& family) {
  if (!g.strong()) throw PreconditionError("the intersection property check needs a strong space");
  for (std::size_t i = 0; i < family.size(); ++i) {
    g.check(family[i]);
    if (!g.is_regular_closed(family[i])) {
      throw PreconditionError("family member " + std::to_string(i) + " " + to_string(family[i]) +
                              " is not soft mu-regular closed");
    }
  }
  if (family.size() > kFipEnumerationLimit) {
    throw ThresholdExceeded("intersection property enumeration is limited to " +
                            std::to_string(kFipEnumerationLimit) + " members");
  }

  SoftSet total = g.carrier();
  for (const auto& f : family) total = soft_intersection(total, f);

  FipVerdict v{false, {}, total};
  v.fip_holds = true;
  const std::uint32_t subsets = std::uint32_t{1} << family.size();
  const std::size_t p = g.frame().parameters.size();
  for (std::uint32_t mask = 1; mask < subsets && v.fip_holds; ++mask) {
    std::vector<PointSet> acc(g.carrier().rows().begin(), g.carrier().rows().end());
    for (std::size_t i = 0; i < family.size(); ++i)
      if ((mask >> i) & 1U)
        for (std::size_t r = 0; r < p; ++r) acc[r] &= family[i].at(r);
    if (std::all_of(acc.begin(), acc.end(), [](PointSet row) { return row == 0; })) {
      v.fip_holds = false;
      for (std::size_t i = 0; i < family.size(); ++i)
        if ((mask >> i) & 1U) v.empty_subfamily.push_back(i);
    }
  }
  v.total_nonempty = !total.is_empty();
  v.space_n_mu_compact = true;  // finite strong space
  v.consistent = !(v.fip_holds && v.space_n_mu_compact) || v.total_nonempty;
  return v;
}

}  // namespace softgt
