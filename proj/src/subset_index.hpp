#pragma once

#include <span>
#include <vector>

#include "lotto/combinatorics.hpp"
#include "lotto/design.hpp"

namespace lotto::detail {

// Membership bitmap over all t-subsets of {1..n}, keyed by lex rank.
class TSubsetIndex {
 public:
  TSubsetIndex(int n, int t)
      : n_(n), t_(t), bits_(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)), false) {}

  int n() const noexcept { return n_; }
  int t() const noexcept { return t_; }
  std::size_t universe() const noexcept { return bits_.size(); }

  bool covered(SubsetRank r) const { return bits_[r]; }
  bool covered(std::span<const int> subset) const { return bits_[rank(subset, n_)]; }

  // Returns how many of the block's t-subsets were newly marked.
  int mark_block(std::span<const int> block) {
    int fresh = 0;
    for_each_subset_of(block, t_, [&](std::span<const int> sub) {
      auto r = rank(sub, n_);
      if (!bits_[r]) {
        bits_[r] = true;
        ++fresh;
      }
    });
    return fresh;
  }

  int count_uncovered_in(std::span<const int> block) const {
    int fresh = 0;
    for_each_subset_of(block, t_, [&](std::span<const int> sub) { fresh += bits_[rank(sub, n_)] ? 0 : 1; });
    return fresh;
  }

  static TSubsetIndex of(const Design& d, int t) {
    TSubsetIndex idx(d.n(), t);
    for (const auto& b : d) idx.mark_block(b.elements());
    return idx;
  }

 private:
  int n_;
  int t_;
  std::vector<bool> bits_;
};

}  // namespace lotto::detail
