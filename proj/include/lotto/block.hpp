#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lotto {

/// Largest supported ground set. Blocks carry a 64-bit membership mask.
inline constexpr int kMaxGroundSet = 64;

/// A strictly ascending set of 1-based elements: one ticket.
///
/// Blocks order lexicographically, which is the canonical order used by
/// every enumeration and report in the library.
class Block {
 public:
  Block() = default;

  /// Takes elements that are already strictly ascending and >= 1.
  /// Throws InvalidDesign otherwise.
  explicit Block(std::vector<int> elements);
  Block(std::initializer_list<int> elements) : Block(std::vector<int>(elements)) {}

  /// Sorts `elements` first. Duplicates or values < 1 throw InvalidDesign.
  static Block canonical(std::vector<int> elements);

  std::span<const int> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  int operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// Largest element, 0 for the empty block.
  int max_element() const noexcept { return elems_.empty() ? 0 : elems_.back(); }

  /// True when the block has `k` elements, all within [1, n].
  bool fits(int n, int k) const noexcept;

  /// Bit (e-1) set for every element e. Requires max_element() <= 64.
  std::uint64_t mask() const;

  bool contains(int element) const noexcept;

  friend auto operator<=>(const Block&, const Block&) = default;
  friend bool operator==(const Block&, const Block&) = default;

 private:
  struct Trusted {};
  Block(Trusted, std::vector<int> elements) : elems_(std::move(elements)) {}
  friend class KSubsets;
  friend Block block_from_mask(std::uint64_t mask);

  std::vector<int> elems_;
};

/// Inverse of Block::mask().
Block block_from_mask(std::uint64_t mask);

/// "1 2 5": elements separated by single spaces.
std::string to_string(const Block& block);

/// Parses a comma-separated literal such as "1,2,6" (order free).
Block parse_block_literal(const std::string& text);

}  // namespace lotto
