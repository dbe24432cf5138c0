#pragma once

// Exact search over finite families of bit rows: minimum subcover and the
// largest irredundant cover. Plain sets use one 64-bit word per row, soft sets
// one word per parameter.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softgt/errors.hpp"

namespace softgt {

/// Exact minimum-subcover search refuses families larger than this.
inline constexpr std::size_t kExactCoverLimit = 24;

/// Node budget for the irredundant-cover enumeration.
inline constexpr std::size_t kIrredundantNodeBudget = 20'000'000;

struct SubcoverResult {
  std::size_t size = 0;
  std::vector<std::size_t> indices;  // ascending positions in the searched family

  friend bool operator==(const SubcoverResult&, const SubcoverResult&) = default;
};

/// A target row plus an indexed family of member rows, all of equal width.
class CoverProblem {
 public:
  using Word = std::uint64_t;

  CoverProblem(std::size_t width, std::vector<Word> target) : width_(width), target_(std::move(target)) {
    if (target_.size() != width_) throw StructuralError("cover target has the wrong width");
  }

  void add(std::span<const Word> member) {
    if (member.size() != width_) throw StructuralError("cover member has the wrong width");
    for (std::size_t w = 0; w < width_; ++w) words_.push_back(member[w] & target_[w]);
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return width_ == 0 ? 0 : words_.size() / width_; }
  std::span<const Word> target() const noexcept { return target_; }
  std::span<const Word> member(std::size_t i) const { return {words_.data() + i * width_, width_}; }

  /// Does the union of the members at `indices` equal the target?
  bool covers(std::span<const std::size_t> indices) const {
    std::vector<Word> acc(width_, 0);
    for (std::size_t i : indices) {
      auto m = member(i);
      for (std::size_t w = 0; w < width_; ++w) acc[w] |= m[w];
    }
    return std::equal(acc.begin(), acc.end(), target_.begin());
  }

  bool covers_all() const {
    std::vector<std::size_t> all(size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return covers(all);
  }

  /// No proper subfamily of `indices` covers the target.
  bool irredundant(std::span<const std::size_t> indices) const {
    for (std::size_t skip = 0; skip < indices.size(); ++skip) {
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < indices.size(); ++j)
        if (j != skip) rest.push_back(indices[j]);
      if (covers(rest)) return false;
    }
    return true;
  }

 private:
  std::size_t width_;
  std::vector<Word> target_;
  std::vector<Word> words_;
};

namespace detail {

using Word = CoverProblem::Word;

inline std::size_t popcount_row(std::span<const Word> row) {
  std::size_t n = 0;
  for (Word w : row) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

class MinCoverSearch {
 public:
  explicit MinCoverSearch(const CoverProblem& problem) : p_(problem), m_(problem.size()), w_(problem.width()) {
    suffix_union_.assign((m_ + 1) * w_, 0);
    suffix_max_.assign(m_ + 1, 0);
    for (std::size_t i = m_; i-- > 0;) {
      auto row = p_.member(i);
      for (std::size_t w = 0; w < w_; ++w) suffix_union_[i * w_ + w] = suffix_union_[(i + 1) * w_ + w] | row[w];
      suffix_max_[i] = std::max(suffix_max_[i + 1], popcount_row(row));
    }
  }

  std::size_t greedy_bound() const {
    std::vector<Word> acc(w_, 0);
    std::size_t used = 0;
    while (!covered(acc)) {
      std::size_t best = m_, best_gain = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t g = gain(p_.member(i), acc);
        if (g > best_gain) best = i, best_gain = g;
      }
      if (best == m_) return m_ + 1;
      auto row = p_.member(best);
      for (std::size_t w = 0; w < w_; ++w) acc[w] |= row[w];
      ++used;
    }
    return used;
  }

  /// Lexicographically first k-subfamily covering the target, if one exists.
  std::optional<std::vector<std::size_t>> search(std::size_t k) {
    chosen_.clear();
    stack_.assign((k + 1) * w_, 0);
    if (dfs(0, 0, k)) return chosen_;
    return std::nullopt;
  }

 private:
  bool covered(std::span<const Word> acc) const {
    auto t = p_.target();
    for (std::size_t w = 0; w < w_; ++w)
      if ((t[w] & ~acc[w]) != 0) return false;
    return true;
  }

  std::size_t gain(std::span<const Word> row, std::span<const Word> acc) const {
    std::size_t g = 0;
    for (std::size_t w = 0; w < w_; ++w) g += static_cast<std::size_t>(std::popcount(row[w] & ~acc[w]));
    return g;
  }

  bool dfs(std::size_t start, std::size_t depth, std::size_t k) {
    std::span<Word> acc{stack_.data() + depth * w_, w_};
    if (covered(acc)) return true;
    if (depth == k) return false;
    const std::size_t remaining = k - depth;
    auto t = p_.target();
    std::size_t missing = 0;
    for (std::size_t w = 0; w < w_; ++w) missing += static_cast<std::size_t>(std::popcount(t[w] & ~acc[w]));
    for (std::size_t i = start; i < m_; ++i) {
      bool reachable = true;
      for (std::size_t w = 0; w < w_ && reachable; ++w)
        reachable = (t[w] & ~acc[w] & ~suffix_union_[i * w_ + w]) == 0;
      if (!reachable) break;
      if (remaining * suffix_max_[i] < missing) break;
      auto row = p_.member(i);
      if (gain(row, acc) == 0) continue;
      std::span<Word> next{stack_.data() + (depth + 1) * w_, w_};
      for (std::size_t w = 0; w < w_; ++w) next[w] = acc[w] | row[w];
      chosen_.push_back(i);
      if (dfs(i + 1, depth + 1, k)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const CoverProblem& p_;
  std::size_t m_;
  std::size_t w_;
  std::vector<Word> suffix_union_;
  std::vector<std::size_t> suffix_max_;
  std::vector<Word> stack_;
  std::vector<std::size_t> chosen_;
};

class IrredundantSearch {
 public:
  using Visitor = std::function<void(std::span<const std::size_t>)>;

  /// Without a visitor only the largest cover is tracked and branches that
  /// cannot beat it are cut.
  IrredundantSearch(const CoverProblem& problem, std::size_t budget, Visitor visitor = {})
      : p_(problem), m_(problem.size()), w_(problem.width()), budget_(budget), visitor_(std::move(visitor)) {}

  std::optional<SubcoverResult> run() {
    once_.assign((m_ + 2) * w_, 0);
    multi_.assign((m_ + 2) * w_, 0);
    dfs(0, 0);
    return best_;
  }

 private:
  void dfs(std::size_t start, std::size_t depth) {
    if (++nodes_ > budget_) {
      throw ThresholdExceeded("irredundant cover enumeration exceeded " + std::to_string(budget_) + " nodes");
    }
    const Word* once = once_.data() + depth * w_;
    const Word* multi = multi_.data() + depth * w_;
    auto t = p_.target();
    std::size_t missing = 0;
    for (std::size_t w = 0; w < w_; ++w)
      missing += static_cast<std::size_t>(std::popcount(t[w] & ~(once[w] | multi[w])));
    if (missing == 0) {
      if (!best_ || depth > best_->size) best_ = SubcoverResult{depth, chosen_};
      if (visitor_) visitor_(chosen_);
      return;
    }
    // Each further member must bring at least one uncovered element.
    if (!visitor_ && best_ && depth + missing <= best_->size) return;
    Word* next_once = once_.data() + (depth + 1) * w_;
    Word* next_multi = multi_.data() + (depth + 1) * w_;
    for (std::size_t i = start; i < m_; ++i) {
      auto row = p_.member(i);
      bool fresh = false;
      for (std::size_t w = 0; w < w_; ++w) {
        const Word acc = once[w] | multi[w];
        fresh = fresh || (row[w] & ~acc) != 0;
        next_multi[w] = multi[w] | (once[w] & row[w]);
        next_once[w] = (once[w] & ~row[w]) | (row[w] & ~acc);
      }
      if (!fresh) continue;
      bool all_private = true;
      for (std::size_t j : chosen_) {
        auto other = p_.member(j);
        bool has = false;
        for (std::size_t w = 0; w < w_ && !has; ++w) has = (other[w] & next_once[w]) != 0;
        if (!has) {
          all_private = false;
          break;
        }
      }
      if (!all_private) continue;
      chosen_.push_back(i);
      dfs(i + 1, depth + 1);
      chosen_.pop_back();
    }
  }

  const CoverProblem& p_;
  std::size_t m_;
  std::size_t w_;
  std::size_t budget_;
  Visitor visitor_;
  std::size_t nodes_ = 0;
  std::vector<Word> once_;
  std::vector<Word> multi_;
  std::vector<std::size_t> chosen_;
  std::optional<SubcoverResult> best_;
};

}  // namespace detail

/// Smallest subfamily whose union is the target; among those of minimal size
/// the lexicographically smallest index set. Returns nullopt when the whole
/// family does not cover the target.
inline std::optional<SubcoverResult> exact_min_cover(const CoverProblem& problem) {
  if (problem.size() > kExactCoverLimit) {
    throw ThresholdExceeded("exact subcover search is limited to " + std::to_string(kExactCoverLimit) +
                            " members, got " + std::to_string(problem.size()));
  }
  if (!problem.covers_all()) return std::nullopt;
  detail::MinCoverSearch search(problem);
  const std::size_t upper = search.greedy_bound();
  for (std::size_t k = 0; k <= upper; ++k) {
    if (auto found = search.search(k)) return SubcoverResult{k, std::move(*found)};
  }
  throw Error("subcover search failed to reach the greedy bound");  // unreachable
}

/// Largest subfamily that covers the target and has no proper covering
/// subfamily; ties go to the lexicographically smallest index set. This is the
/// worst case over all covers drawn from the family of the minimum subcover
/// size. Returns nullopt when the whole family does not cover the target.
inline std::optional<SubcoverResult> max_irredundant_cover(const CoverProblem& problem,
                                                           std::size_t node_budget = kIrredundantNodeBudget) {
  return detail::IrredundantSearch(problem, node_budget).run();
}

/// Calls `visit` with the ascending index set of every irredundant cover, in
/// lexicographic order. Returns how many were visited.
inline std::size_t for_each_irredundant_cover(const CoverProblem& problem,
                                              const std::function<void(std::span<const std::size_t>)>& visit,
                                              std::size_t node_budget = kIrredundantNodeBudget) {
  std::size_t count = 0;
  detail::IrredundantSearch search(problem, node_budget, [&](std::span<const std::size_t> indices) {
    ++count;
    visit(indices);
  });
  search.run();
  return count;
}

}  // namespace softgt
