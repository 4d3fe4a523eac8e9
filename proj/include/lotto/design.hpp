#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lotto/block.hpp"
#include "lotto/combinatorics.hpp"

namespace lotto {

/// An (n, k, p, t) lottery scheme: tickets of k numbers, p numbers drawn
/// from {1..n}, a win needs t matches. Covering problems use (n, k, t).
struct Scheme {
  int n = 0;
  int k = 0;
  int p = 0;
  int t = 0;

  /// Validates 0 <= t <= min(k, p), 1 <= k, p <= n <= 64.
  static Scheme make(int n, int k, int p, int t);

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

std::string to_string(const Scheme& s);

/// An ordered, duplicate-free collection of k-blocks over {1..n}.
///
/// Order is kept as constructed. `operator==` compares as sets;
/// `same_sequence` also requires identical order.
class Design {
 public:
  Design(int n, int k);
  Design(int n, int k, std::vector<Block> blocks);

  /// Appends `block`. Throws InvalidDesign if it does not fit (n, k) or is
  /// already present.
  void add(Block block);
  bool contains(const Block& block) const;

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }
  auto begin() const noexcept { return blocks_.begin(); }
  auto end() const noexcept { return blocks_.end(); }

  bool same_sequence(const Design& other) const;
  friend bool operator==(const Design& a, const Design& b);

 private:
  int n_;
  int k_;
  std::vector<Block> blocks_;
  std::unordered_set<SubsetRank> ranks_;
};

struct ParsedDesign {
  Design design;
  /// Non-fatal diagnostics, e.g. lines that were re-sorted.
  std::vector<std::string> warnings;
};

/// Reads the plain-text design format: one block per line, whitespace
/// separated 1-based integers, '#' comment lines, blank lines ignored,
/// LF or CRLF. Throws FormatError with the offending line number.
ParsedDesign parse_design(std::istream& in, int n, int k);
ParsedDesign parse_design(std::string_view text, int n, int k);

/// Canonical form: one ascending block per line, single spaces, LF.
std::string serialize_design(const Design& design);
void write_design(std::ostream& out, const Design& design);

}  // namespace lotto
