#pragma once

// Property suites over seeded random finite instances. Each suite counts the
// checks it made and keeps the first counterexample it saw.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "softgt/cover_engine.hpp"
#include "softgt/gt_space.hpp"
#include "softgt/random_instances.hpp"
#include "softgt/sgt_space.hpp"
#include "softgt/soft_core.hpp"

namespace softgt {

struct LawReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

/// Soft subsets of a carrier with more (parameter, point) pairs than this are
/// sampled instead of enumerated.
inline constexpr std::size_t kSubsetEnumerationWeight = 16;

/// Calls f for every soft subset of `of`, or for `samples` random ones when
/// `of` is too heavy to enumerate.
template <class F>
void for_each_soft_subset(const SoftSet& of, F&& f, Rng* rng = nullptr, std::size_t samples = 256) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < of.parameter_count(); ++r)
    for_each_point(of.at(r), [&](std::size_t x) { cells.emplace_back(r, x); });
  if (cells.size() > kSubsetEnumerationWeight) {
    if (rng == nullptr) throw ThresholdExceeded("soft subset enumeration needs a random source past weight 16");
    for (std::size_t i = 0; i < samples; ++i) f(random_soft_subset(*rng, of));
    return;
  }
  const std::uint64_t count = std::uint64_t{1} << cells.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<PointSet> rows(of.parameter_count(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((mask >> c) & 1U) rows[cells[c].first] |= singleton(cells[c].second);
    f(SoftSet(of.frame_ptr(), std::move(rows)));
  }
}

namespace detail {

inline std::string describe_space(const SGTS& g) {
  std::string out = "carrier " + to_string(g.carrier()) + ", basis [";
  for (std::size_t i = 0; i < g.basis().size(); ++i) out += (i ? ", " : "") + to_string(g.basis()[i]);
  return out + "]";
}

inline std::string describe_space(const GTS& g) {
  std::string out = "X " + format_points(g.universe(), g.all()) + ", base [";
  for (std::size_t i = 0; i < g.base().size(); ++i) out += (i ? ", " : "") + format_points(g.universe(), g.base()[i]);
  return out + "]";
}

}  // namespace detail

/// Union/intersection laws, De Morgan, difference through complement, and the
/// soft subset partial order.
inline LawReport law_soft_algebra(std::uint64_t seed, std::size_t count) {
  LawReport rep;
  rep.name = "soft set algebra";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const FramePtr frame = detail::random_frame(rng, InstanceShape{});
    const SoftSet all = SoftSet::universal(frame);
    const SoftSet s = random_soft_subset(rng, all), t = random_soft_subset(rng, all), u = random_soft_subset(rng, all);
    auto show = [&] { return to_string(s) + " " + to_string(t) + " " + to_string(u); };
    rep.check(soft_union(s, soft_union(t, u)) == soft_union(soft_union(s, t), u), show);
    rep.check(soft_intersection(s, soft_intersection(t, u)) == soft_intersection(soft_intersection(s, t), u), show);
    rep.check(soft_union(s, t) == soft_union(t, s) && soft_intersection(s, t) == soft_intersection(t, s), show);
    rep.check(soft_union(s, s) == s && soft_intersection(s, s) == s, show);
    rep.check(soft_complement(soft_union(s, t)) == soft_intersection(soft_complement(s), soft_complement(t)), show);
    rep.check(soft_complement(soft_intersection(s, t)) == soft_union(soft_complement(s), soft_complement(t)), show);
    rep.check(soft_difference(s, t) == soft_intersection(s, soft_complement(t)), show);
    rep.check(soft_complement(soft_complement(s)) == s, show);
    rep.check(is_soft_subset(s, s), show);
    rep.check(!(is_soft_subset(s, t) && is_soft_subset(t, s)) || s == t, show);
    const SoftSet st = soft_intersection(s, t);
    const SoftSet stu = soft_intersection(st, u);
    rep.check(is_soft_subset(stu, st) && is_soft_subset(st, s) && is_soft_subset(stu, s), show);
  }
  return rep;
}

/// Interior is monotone, idempotent and deflationary; closure is monotone,
/// idempotent and inflationary.
inline LawReport law_operators(std::uint64_t seed, std::size_t count) {
  LawReport rep;
  rep.name = "interior and closure operators";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const SGTS g = random_strong_sgts(rng);
    for (std::size_t k = 0; k < 16; ++k) {
      const SoftSet t = random_soft_subset(rng, g.carrier());
      const SoftSet s = random_soft_subset(rng, t);
      auto show = [&] { return detail::describe_space(g) + "; s=" + to_string(s) + " t=" + to_string(t); };
      const SoftSet is = g.interior(s), it = g.interior(t), cs = g.closure(s), ct = g.closure(t);
      rep.check(is_soft_subset(is, it) && is_soft_subset(cs, ct), show);
      rep.check(g.interior(is) == is && g.closure(cs) == cs, show);
      rep.check(is_soft_subset(is, s) && is_soft_subset(s, cs), show);
      rep.check(g.is_open(is) && g.is_closed(cs), show);
    }
  }
  return rep;
}

/// Interiors of closed sets are regular open, closures of open sets are
/// regular closed, regular open sets are open, regular closed sets are closed.
inline LawReport law_regular_from_operators(std::uint64_t seed, std::size_t count) {
  LawReport rep;
  rep.name = "regular sets from closed interiors and open closures";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const SGTS g = random_strong_sgts(rng);
    for (const auto& o : g.opens()) {
      const SoftSet f = g.complement(o);  // closed
      rep.check(g.is_regular_open(g.interior(f)),
                [&] { return detail::describe_space(g) + "; closed " + to_string(f) + " has non-regular interior"; });
      rep.check(g.is_regular_closed(g.closure(o)),
                [&] { return detail::describe_space(g) + "; open " + to_string(o) + " has non-regular closure"; });
    }
    for_each_soft_subset(g.carrier(), [&](const SoftSet& s) {
      rep.check(!g.is_regular_open(s) || g.is_open(s), [&] { return "regular open but not open: " + to_string(s); });
      rep.check(!g.is_regular_closed(s) || g.is_closed(s), [&] { return "regular closed but not closed: " + to_string(s); });
    }, &rng);
  }
  return rep;
}

/// (c((c(s))^o))^o = (c(s))^o for every soft subset, and the plain analogue.
inline LawReport law_regularization_idempotence(std::uint64_t seed, std::size_t count) {
  LawReport rep;
  rep.name = "regularization idempotence";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const SGTS g = random_strong_sgts(rng);
    for_each_soft_subset(g.carrier(), [&](const SoftSet& s) {
      const SoftSet once = g.regularize(s);
      rep.check(g.regularize(once) == once, [&] { return detail::describe_space(g) + "; s=" + to_string(s); });
    }, &rng);
    const GTS h = random_mu_space(rng);
    for (PointSet a = 0; a <= h.all(); ++a) {
      const PointSet once = h.regularize(a);
      rep.check(h.regularize(once) == once,
                [&] { return detail::describe_space(h) + "; A=" + format_points(h.universe(), a); });
    }
  }
  return rep;
}

/// For every open b, the regular-open sets of subspace(g, b) are exactly the
/// traces u & b of the regular-open sets u of g. When `qt_only` is set, only
/// spaces whose opens are closed under finite intersections are drawn.
inline LawReport law_subspace_trace(std::uint64_t seed, std::size_t count, bool qt_only = false) {
  LawReport rep;
  rep.name = qt_only ? "subspace regular-open traces (quasi-topologies)" : "subspace regular-open traces";
  Rng rng(seed);
  while (rep.instances < count) {
    SGTS g = random_strong_sgts(rng);
    if (qt_only) {
      // Meets of unions are unions of meets, so closing the basis suffices.
      std::set<SoftSet> basis(g.basis().begin(), g.basis().end());
      for (bool grew = true; grew;) {
        grew = false;
        const std::vector<SoftSet> current(basis.begin(), basis.end());
        for (std::size_t a = 0; a < current.size(); ++a)
          for (std::size_t b = a + 1; b < current.size(); ++b)
            grew = basis.insert(soft_intersection(current[a], current[b])).second || grew;
      }
      g = SGTS(g.carrier(), {basis.begin(), basis.end()});
      if (!g.is_quasi_topology()) continue;
    }
    ++rep.instances;
    const std::vector<SoftSet> regular = enumerate_regular_open(g);
    for (const auto& b : g.opens()) {
      std::vector<SoftSet> traces;
      for (const auto& u : regular) traces.push_back(soft_intersection(u, b));
      canonicalize(traces);
      const std::vector<SoftSet> sub_regular = enumerate_regular_open(subspace(g, b));
      rep.check(sub_regular == traces, [&] {
        std::string msg = detail::describe_space(g) + "; b=" + to_string(b) + "; subspace regular-open [";
        for (std::size_t k = 0; k < sub_regular.size(); ++k) msg += (k ? ", " : "") + to_string(sub_regular[k]);
        msg += "] vs traces [";
        for (std::size_t k = 0; k < traces.size(); ++k) msg += (k ? ", " : "") + to_string(traces[k]);
        return msg + "]";
      });
    }
  }
  return rep;
}

/// On A-universal carriers: a family of soft sets is a soft open cover iff
/// every projection is a mu_r-open cover, and a soft set is soft regular
/// open (closed) iff every projection is mu_r-regular open (closed).
inline LawReport law_a_universal_correspondence(std::uint64_t seed, std::size_t count, BasisStyle style) {
  LawReport rep;
  rep.name = style == BasisStyle::general ? "A-universal projection correspondence"
                                                     : "A-universal projection correspondence (per-parameter bases)";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const SGTS g = random_a_universal_sgts(rng, style);
    const std::size_t p = g.frame().parameters.size();
    std::vector<GTS> projections;
    for (std::size_t r = 0; r < p; ++r) projections.push_back(project(g, r));

    for_each_soft_subset(g.carrier(), [&](const SoftSet& s) {
      bool ro = true, rc = true;
      for (std::size_t r = 0; r < p; ++r) {
        ro = ro && projections[r].is_regular_open(s.at(r));
        rc = rc && projections[r].is_regular_closed(s.at(r));
      }
      rep.check(g.is_regular_open(s) == ro, [&] {
        return detail::describe_space(g) + "; s=" + to_string(s) + " soft regular open=" +
               (g.is_regular_open(s) ? "yes" : "no") + ", every projection regular open=" + (ro ? "yes" : "no");
      });
      rep.check(g.is_regular_closed(s) == rc, [&] {
        return detail::describe_space(g) + "; s=" + to_string(s) + " soft regular closed=" +
               (g.is_regular_closed(s) ? "yes" : "no") + ", every projection regular closed=" + (rc ? "yes" : "no");
      });
    }, &rng);

    for (std::size_t k = 0; k < 32; ++k) {
      std::vector<SoftSet> family;
      const std::size_t size = detail::uniform_index(rng, 1, 4);
      for (std::size_t j = 0; j < size; ++j) {
        // Bias towards open members so both verdicts occur.
        SoftSet s = random_soft_subset(rng, g.carrier());
        family.push_back(detail::uniform_index(rng, 0, 3) == 0 ? s : g.interior(s));
      }
      if (detail::uniform_index(rng, 0, 1) == 0) family.push_back(g.carrier());
      const bool soft_cover = diagnose_cover(g, family).ok();
      bool projected = true;
      for (std::size_t r = 0; r < p; ++r) {
        SetFamily rows;
        for (const auto& s : family) rows.push_back(s.at(r));
        projected = projected && is_open_cover(projections[r], rows);
      }
      rep.check(soft_cover == projected, [&] {
        std::string msg = detail::describe_space(g) + "; family [";
        for (std::size_t j = 0; j < family.size(); ++j) msg += (j ? ", " : "") + to_string(family[j]);
        return msg + "] soft cover=" + (soft_cover ? "yes" : "no") + ", projected covers=" + (projected ? "yes" : "no");
      });
    }
  }
  return rep;
}

/// The regular-open-cover formulation and the near-subcover formulation of
/// soft near compactness agree, down to the worst-case sizes.
inline LawReport law_formulation_equivalence(std::uint64_t seed, std::size_t count) {
  LawReport rep;
  rep.name = "near compactness formulations agree";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const SGTS g = random_strong_sgts(rng);
    const CompactnessReport report = is_soft_n_mu_compact_finite(g);
    rep.check(report.formulations_agree && report.compact == report.near_formulation, [&] {
      return detail::describe_space(g) + "; regular-open size " + std::to_string(report.regular_minimal_subcover_size) +
             " vs near size " + std::to_string(report.near_minimal_subcover_size);
    });
    rep.check(report.near_minimal_subcover_size <= report.plain_minimal_subcover_size,
              [&] { return detail::describe_space(g) + "; near size exceeds plain size"; });
  }
  return rep;
}

/// For every subfamily F of the regular-open sets: the relative complements
/// are regular closed and meet exactly in carrier \ union(F), so F covers iff
/// the complements have empty intersection.
inline LawReport law_fip_duality(std::uint64_t seed, std::size_t count) {
  LawReport rep;
  rep.name = "regular-open cover / regular-closed intersection duality";
  Rng rng(seed);
  constexpr std::size_t kMaxEnumerated = 12;
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const SGTS g = random_strong_sgts(rng);
    const std::vector<SoftSet> regular = enumerate_regular_open(g);
    const std::vector<SoftSet> closed = relative_complements(g, regular);
    for (const auto& f : closed)
      rep.check(g.is_regular_closed(f), [&] { return "complement " + to_string(f) + " is not regular closed"; });

    auto visit = [&](const std::vector<std::size_t>& picks) {
      std::vector<SoftSet> members, complements;
      for (std::size_t k : picks) members.push_back(regular[k]), complements.push_back(closed[k]);
      const SoftSet uncovered = g.complement(soft_union_all(g.frame_ptr(), members));
      const FipVerdict v = fip_nonempty_intersection_check(g, complements);
      const bool covers = diagnose_cover(g, members).ok();
      auto show = [&] { return detail::describe_space(g) + "; cover intersection mismatch"; };
      rep.check(v.total_intersection == uncovered, show);
      rep.check(covers == !v.total_nonempty, show);
      rep.check(!covers || !v.fip_holds, show);
      rep.check(v.consistent, show);
    };
    if (regular.size() <= kMaxEnumerated) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << regular.size()); ++mask) {
        std::vector<std::size_t> picks;
        for (std::size_t k = 0; k < regular.size(); ++k)
          if ((mask >> k) & 1U) picks.push_back(k);
        visit(picks);
      }
    } else {
      for (std::size_t s = 0; s < 512; ++s) {
        std::vector<std::size_t> picks;
        for (std::size_t k = 0; k < regular.size(); ++k)
          if (detail::uniform_index(rng, 0, 1) == 1) picks.push_back(k);
        visit(picks);
      }
    }
  }
  return rep;
}

/// Projections are generalized topologies on X, and soft open covers project
/// to mu_r-open covers.
inline LawReport law_projection(std::uint64_t seed, std::size_t count) {
  LawReport rep;
  rep.name = "projections are generalized topologies";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++rep.instances) {
    const SGTS g = random_strong_sgts(rng);
    const std::vector<SoftSet> opens = g.opens();
    for (std::size_t r = 0; r < g.frame().parameters.size(); ++r) {
      const GTS h = project(g, r);
      std::set<PointSet> expected;
      for (const auto& o : opens) expected.insert(o.at(r));
      const SetFamily got = h.opens();
      rep.check(SetFamily(expected.begin(), expected.end()) == got,
                [&] { return detail::describe_space(g) + "; projection at parameter " + std::to_string(r); });
      std::set<PointSet> closed(got.begin(), got.end());
      bool union_closed = closed.count(0) == 1;
      for (PointSet a : got)
        for (PointSet b : got) union_closed = union_closed && closed.count(a | b) == 1;
      rep.check(union_closed, [&] { return detail::describe_space(g) + "; projection is not union closed"; });
      rep.check(h.mu_space() == (closed.count(h.all()) == 1), [&] { return "mu-space flag mismatch"; });
      SetFamily rows;
      for (const auto& o : opens) rows.push_back(o.at(r));
      if (g.carrier().at(r) == h.all()) {
        rep.check(is_open_cover(h, rows), [&] { return detail::describe_space(g) + "; projected opens do not cover X"; });
      }
    }
  }
  return rep;
}

/// Every law suite at the given seed and instance count.
inline std::vector<LawReport> run_all_laws(std::uint64_t seed, std::size_t count) {
  return {
      law_soft_algebra(seed, count),
      law_operators(seed + 1, count),
      law_regular_from_operators(seed + 2, count),
      law_regularization_idempotence(seed + 3, count),
      law_subspace_trace(seed + 4, count),
      law_subspace_trace(seed + 5, count, true),
      law_a_universal_correspondence(seed + 6, count, BasisStyle::general),
      law_a_universal_correspondence(seed + 7, count, BasisStyle::per_parameter),
      law_formulation_equivalence(seed + 8, count),
      law_fip_duality(seed + 9, count),
      law_projection(seed + 10, count),
  };
}

}  // namespace softgt
