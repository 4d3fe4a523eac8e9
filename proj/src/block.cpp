#include "lotto/block.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "lotto/errors.hpp"

namespace lotto {

Block::Block(std::vector<int> elements) : elems_(std::move(elements)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1) {
      throw InvalidDesign("block element " + std::to_string(elems_[i]) + " is below 1");
    }
    if (i > 0 && elems_[i] <= elems_[i - 1]) {
      throw InvalidDesign("block elements must be strictly ascending");
    }
  }
}

Block Block::canonical(std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw InvalidDesign("duplicate element within block");
  }
  return Block(std::move(elements));
}

bool Block::fits(int n, int k) const noexcept {
  return static_cast<int>(elems_.size()) == k && (elems_.empty() || elems_.back() <= n);
}

std::uint64_t Block::mask() const {
  std::uint64_t m = 0;
  for (int e : elems_) {
    if (e > kMaxGroundSet) {
      throw DomainError("element " + std::to_string(e) + " exceeds the 64-element ground set limit");
    }
    m |= std::uint64_t{1} << (e - 1);
  }
  return m;
}

bool Block::contains(int element) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), element);
}

Block block_from_mask(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return Block(Block::Trusted{}, std::move(out));
}

std::string to_string(const Block& block) {
  std::string s;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(block[i]);
  }
  return s;
}

Block parse_block_literal(const std::string& text) {
  std::vector<int> elems;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string_view tok(text.data() + pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw FormatError(0, "bad block literal '" + text + "'");
    }
    elems.push_back(value);
    pos = comma + 1;
  }
  try {
    return Block::canonical(std::move(elems));
  } catch (const InvalidDesign& e) {
    throw FormatError(0, "bad block literal '" + text + "': " + e.what());
  }
}

}  // namespace lotto
