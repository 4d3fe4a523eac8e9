#include "lotto/constructor.hpp"

#include <algorithm>
#include <string>

#include "lotto/errors.hpp"
#include "subset_index.hpp"

namespace lotto {

Design greedy_cover(int n, int k, int t) {
  if (n < 1 || n > kMaxGroundSet || k < 1 || k > n || t < 0 || t > k) {
    throw DomainError("greedy_cover requires 0 <= t <= k <= n <= 64");
  }
  Design design(n, k);
  detail::TSubsetIndex covered(n, t);
  std::size_t remaining = covered.universe();
  std::vector<char> taken(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)), 0);

  const int per_block = static_cast<int>(binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t)));
  for (int need = per_block; need >= 1 && remaining > 0; --need) {
    std::vector<int> cand(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cand[i] = i + 1;
    SubsetRank r = 0;
    do {
      if (!taken[r] && covered.count_uncovered_in(cand) >= need) {
        remaining -= static_cast<std::size_t>(covered.mark_block(cand));
        taken[r] = 1;
        design.add(Block(cand));
        if (remaining == 0) break;
      }
      ++r;
    } while (next_ksubset(cand, n));
  }
  return design;
}

Design cyclic_design(int n, int k, const Block& initial) {
  if (n < 1 || n > kMaxGroundSet) throw DomainError("n must be in [1, 64]");
  if (!initial.fits(n, k) || k < 1) {
    throw InvalidDesign("initial block {" + to_string(initial) + "} is not a " + std::to_string(k) +
                        "-subset of [1, " + std::to_string(n) + "]");
  }
  Design design(n, k);
  std::vector<int> cur(initial.begin(), initial.end());
  for (int step = 0; step < n; ++step) {
    Block b = Block::canonical(cur);
    if (step > 0 && b == initial) break;
    design.add(std::move(b));
    for (int& e : cur) e = e < n ? e + 1 : 1;
  }
  return design;
}

Count saturation_bound(const Scheme& scheme) {
  const auto s = Scheme::make(scheme.n, scheme.k, scheme.p, scheme.t);
  if (s.k != s.p) throw DomainError("saturation bound requires ticket size k equal to draw size p");
  const Count total = binomial(static_cast<std::uint64_t>(s.n), static_cast<std::uint64_t>(s.p));
  Count qualifying = 0;
  for (int tt = s.t; tt <= s.p; ++tt) qualifying = checked_add(qualifying, hit_count(s.n, s.p, tt));
  return total - qualifying + 1;
}

}  // namespace lotto
