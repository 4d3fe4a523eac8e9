#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lotto/block.hpp"

namespace lotto {

/// Exact non-negative count. All arithmetic on it is overflow-checked.
using Count = std::uint64_t;

/// Arbitrary-precision integer for counts beyond 64 bits.
using BigInt = boost::multiprecision::cpp_int;

/// Index of a k-subset in the lexicographic order of all k-subsets of {1..n}.
using SubsetRank = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// C(n, k); zero when k > n. Throws OverflowError if the result exceeds 64 bits.
Count binomial(std::uint64_t n, std::uint64_t k);

/// C(n, k) with no size limit.
BigInt binomial_big(std::uint64_t n, std::uint64_t k);

/// Number of p-subsets of an n-set that contain s fixed common elements,
/// C(n - s, p - s). Requires 1 < s <= p <= n.
Count mce(int n, int p, int s);

/// Number of p-subsets meeting a fixed p-subset in exactly t elements,
/// C(p, t) * C(n - p, p - t). Requires 0 <= t <= p <= n.
Count hit_count(int n, int p, int t);

/// Advances `subset` (ascending, 1-based) to its lexicographic successor
/// among the k-subsets of {1..n}. Returns false after the last one.
bool next_ksubset(std::span<int> subset, int n) noexcept;

/// Calls `fn` on every k-subset of {1..n} in lexicographic order. The span is
/// only valid during the call. k = 0 yields the empty subset once.
void for_each_ksubset(int n, int k, const std::function<void(std::span<const int>)>& fn);

/// Calls `fn` on every t-subset of the ascending `set`, in lexicographic order.
void for_each_subset_of(std::span<const int> set, int t, const std::function<void(std::span<const int>)>& fn);

/// Lazily enumerates the k-subsets of {1..n} in lexicographic order.
class KSubsets {
 public:
  KSubsets(int n, int k);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Block;
    using difference_type = std::ptrdiff_t;
    using pointer = const Block*;
    using reference = const Block&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class KSubsets;
    iterator(int n, int k);
    int n_ = 0;
    bool done_ = true;
    Block current_;
  };

  iterator begin() const { return iterator(n_, k_); }
  std::default_sentinel_t end() const { return {}; }
  Count size() const { return binomial(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(k_)); }

 private:
  static std::vector<int>& elements_of(Block& b) { return b.elems_; }
  int n_;
  int k_;
};

inline KSubsets ksubsets(int n, int k) { return KSubsets(n, k); }

/// Lexicographic rank of an ascending subset of {1..n}. Requires n <= 64.
SubsetRank rank(std::span<const int> subset, int n);
inline SubsetRank rank(const Block& block, int n) { return rank(block.elements(), n); }

/// Writes the k-subset with lexicographic rank `r` into `out` (size k).
void unrank_into(SubsetRank r, int n, std::span<int> out);
Block unrank(SubsetRank r, int n, int k);

}  // namespace lotto
