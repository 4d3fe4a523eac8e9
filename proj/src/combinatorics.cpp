#include "lotto/combinatorics.hpp"

#include <array>
#include <limits>
#include <string>

#include "lotto/errors.hpp"

namespace lotto {
namespace {

__extension__ using U128 = unsigned __int128;

// Pascal's triangle through row 64; C(64, 32) still fits in 64 bits.
struct PascalTable {
  std::array<std::array<Count, kMaxGroundSet + 1>, kMaxGroundSet + 1> c{};
  constexpr PascalTable() {
    for (int n = 0; n <= kMaxGroundSet; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
  constexpr Count operator()(int n, int k) const { return (k < 0 || k > n) ? 0 : c[n][k]; }
};

constexpr PascalTable kPascal;

void require_small_ground_set(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw DomainError("ground set size " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

Count checked_add(Count a, Count b) {
  if (a > std::numeric_limits<Count>::max() - b) throw OverflowError("count addition overflows 64 bits");
  return a + b;
}

Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count multiplication overflows 64 bits");
  return r;
}

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n <= kMaxGroundSet) return kPascal(static_cast<int>(n), static_cast<int>(k));
  k = std::min(k, n - k);
  // r * (n - i) is always divisible by (i + 1); use 128-bit intermediates so
  // only a result that truly exceeds 64 bits is reported.
  U128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > std::numeric_limits<Count>::max()) {
      throw OverflowError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<Count>(r);
}

BigInt binomial_big(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Count mce(int n, int p, int s) {
  if (!(1 < s && s <= p && p <= n)) {
    throw DomainError("mce requires 1 < s <= p <= n");
  }
  return binomial(static_cast<std::uint64_t>(n - s), static_cast<std::uint64_t>(p - s));
}

Count hit_count(int n, int p, int t) {
  if (!(0 <= t && t <= p && p <= n)) {
    throw DomainError("hit_count requires 0 <= t <= p <= n");
  }
  return checked_mul(binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(t)),
                     binomial(static_cast<std::uint64_t>(n - p), static_cast<std::uint64_t>(p - t)));
}

bool next_ksubset(std::span<int> subset, int n) noexcept {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i + 1) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

void for_each_ksubset(int n, int k, const std::function<void(std::span<const int>)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  do {
    fn(cur);
  } while (next_ksubset(cur, n));
}

void for_each_subset_of(std::span<const int> set, int t, const std::function<void(std::span<const int>)>& fn) {
  const int m = static_cast<int>(set.size());
  if (t < 0 || t > m) return;
  std::vector<int> pos(static_cast<std::size_t>(t));
  std::vector<int> sub(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) pos[i] = i + 1;
  do {
    for (int i = 0; i < t; ++i) sub[i] = set[pos[i] - 1];
    fn(sub);
  } while (next_ksubset(pos, m));
}

KSubsets::KSubsets(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k > n) throw DomainError("ksubsets requires 1 <= k <= n");
}

KSubsets::iterator::iterator(int n, int k) : n_(n), done_(false) {
  std::vector<int> first(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) first[i] = i + 1;
  current_ = Block(std::move(first));
}

KSubsets::iterator& KSubsets::iterator::operator++() {
  done_ = !next_ksubset(KSubsets::elements_of(current_), n_);
  return *this;
}

SubsetRank rank(std::span<const int> subset, int n) {
  require_small_ground_set(n);
  const int k = static_cast<int>(subset.size());
  if (k > n) throw DomainError("subset larger than ground set");
  // Complement rank sum_i C(n - b_i, k - i) is a combinadic; lex rank mirrors it.
  Count co = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    const int b = subset[i];
    if (b <= prev || b > n) throw DomainError("subset is not ascending within [1, n]");
    co += kPascal(n - b, k - i);
    prev = b;
  }
  return kPascal(n, k) - 1 - co;
}

void unrank_into(SubsetRank r, int n, std::span<int> out) {
  require_small_ground_set(n);
  const int k = static_cast<int>(out.size());
  const Count total = kPascal(n, k);
  if (k > n || r >= total) {
    throw DomainError("rank " + std::to_string(r) + " out of range for C(" + std::to_string(n) + ", " +
                      std::to_string(k) + ")");
  }
  Count co = total - 1 - r;
  int c = n;  // strictly decreasing combinadic digits c_i = n - b_i
  for (int i = 0; i < k; ++i) {
    const int need = k - i;
    --c;
    while (kPascal(c, need) > co) --c;
    co -= kPascal(c, need);
    out[i] = n - c;
  }
}

Block unrank(SubsetRank r, int n, int k) {
  if (k < 0) throw DomainError("negative subset size");
  std::vector<int> out(static_cast<std::size_t>(k));
  unrank_into(r, n, out);
  return Block(std::move(out));
}

}  // namespace lotto
