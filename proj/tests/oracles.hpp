#pragma once
// Reference implementations used only by the tests. Everything here is
// written independently of the library: plain bitmask brute force and
// textbook big-integer arithmetic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Mask = std::uint64_t;

/// C(n, k) from Pascal's rule, rows cached.
inline Big pascal(int n, int k) {
  static std::vector<std::vector<Big>> rows{{Big(1)}};
  if (k < 0 || k > n) return 0;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Big> row(prev.size() + 1, Big(1));
    for (std::size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// C(n, k) as n (n-1) ... (n-k+1) / k!, for arguments too large for a table.
inline Big product_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Big num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// C(N - M, v) / C(N, v) straight from the definition.
inline Rational no_hit(std::uint64_t N, std::uint64_t M, std::uint64_t v) {
  return Rational(product_binomial(N - M, v), product_binomial(N, v));
}

/// All k-subsets of {1..n} as masks (bit e-1 for element e), lex order.
inline std::vector<Mask> subsets(int n, int k) {
  std::vector<std::vector<int>> lists;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (std::popcount(m) != k) continue;
    std::vector<int> s;
    for (int e = 1; e <= n; ++e) {
      if (m >> (e - 1) & 1) s.push_back(e);
    }
    lists.push_back(std::move(s));
  }
  std::sort(lists.begin(), lists.end());
  std::vector<Mask> out;
  for (const auto& s : lists) {
    Mask m = 0;
    for (int e : s) m |= Mask{1} << (e - 1);
    out.push_back(m);
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= Mask{1} << (e - 1);
  return m;
}

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  for (int e = 1; m != 0; ++e, m >>= 1) {
    if (m & 1) out.push_back(e);
  }
  return out;
}

/// t-subsets (as masks) that no block contains, lex order.
inline std::vector<Mask> uncovered(const std::vector<Mask>& blocks, int n, int t) {
  std::vector<Mask> out;
  for (Mask s : subsets(n, t)) {
    if (std::none_of(blocks.begin(), blocks.end(), [&](Mask b) { return (b & s) == s; })) out.push_back(s);
  }
  return out;
}

/// p-subsets that meet no block in t or more elements, lex order.
inline std::vector<Mask> unserved(const std::vector<Mask>& blocks, int n, int p, int t) {
  std::vector<Mask> out;
  for (Mask d : subsets(n, p)) {
    if (std::none_of(blocks.begin(), blocks.end(), [&](Mask b) { return std::popcount(b & d) >= t; })) {
      out.push_back(d);
    }
  }
  return out;
}

/// Smallest number of k-blocks over {1..n} such that every target is served,
/// found by trying all block combinations of each size in turn. `serves`
/// decides whether a block serves a target. At most 64 targets. Returns -1
/// if nothing up to `max_size` works.
inline int brute_minimum(int n, int k, const std::vector<Mask>& targets, const std::function<bool(Mask, Mask)>& serves,
                         int max_size) {
  const auto blocks = subsets(n, k);
  std::vector<Mask> reach(blocks.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (serves(blocks[b], targets[j])) reach[b] |= Mask{1} << j;
    }
  }
  const Mask full = targets.size() == 64 ? ~Mask{0} : (Mask{1} << targets.size()) - 1;
  const int total = static_cast<int>(blocks.size());
  for (int size = 0; size <= std::min(max_size, total); ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Mask acc = 0;
      for (int i : idx) acc |= reach[static_cast<std::size_t>(i)];
      if (acc == full) return size;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return -1;
}

/// Blocks of a design file, read with nothing but stringstreams.
inline std::vector<std::vector<int>> read_blocks(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<int>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<int> b;
    for (int e; ss >> e;) b.push_back(e);
    if (!b.empty()) out.push_back(b);
  }
  return out;
}

/// Values computed once with an independent arbitrary-precision script and
/// frozen here.
namespace frozen {
inline constexpr double kSafety5005of49 = 0.088547915516596;       // 1 - (1 - 5005/C(49,6))^259
inline constexpr double kJackpot5005of49 = 0.00035791374829303;    // 5005 / C(49,6)
inline constexpr double kJackpot569of15 = 0.11368631368631369;     // 569 / 5005
inline constexpr double kSafety569ApproxOf15 = 0.99868988306232;   // 1 - (1 - 569/5005)^55
inline constexpr double kSafety569ExactOf15 = 0.99873918029125;    // 1 - C(4950,569)/C(5005,569)
/// Exact minus approximate no-hit probability at (5005, 55, v).
inline constexpr std::pair<std::uint64_t, double> kBandGap[] = {
    {205, -1.2715819924606e-3}, {402, -2.5774200155108e-4}, {569, -4.9297228925080e-5}, {591, -3.9115283621301e-5}};
}  // namespace frozen

}  // namespace oracle
