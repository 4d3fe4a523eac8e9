#include "lotto/design.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "lotto/errors.hpp"

namespace lotto {

Scheme Scheme::make(int n, int k, int p, int t) {
  if (n < 1 || n > kMaxGroundSet) throw DomainError("n must be in [1, 64]");
  if (k < 1 || k > n) throw DomainError("k must be in [1, n]");
  if (p < 1 || p > n) throw DomainError("p must be in [1, n]");
  if (t < 0 || t > std::min(k, p)) throw DomainError("t must be in [0, min(k, p)]");
  return Scheme{n, k, p, t};
}

std::string to_string(const Scheme& s) {
  return "(" + std::to_string(s.n) + "," + std::to_string(s.k) + "," + std::to_string(s.p) + "," +
         std::to_string(s.t) + ")";
}

Design::Design(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxGroundSet) throw DomainError("design ground set must be in [1, 64]");
  if (k < 1 || k > n) throw DomainError("block size must be in [1, n]");
}

Design::Design(int n, int k, std::vector<Block> blocks) : Design(n, k) {
  blocks_.reserve(blocks.size());
  for (auto& b : blocks) add(std::move(b));
}

void Design::add(Block block) {
  if (!block.fits(n_, k_)) {
    throw InvalidDesign("block {" + to_string(block) + "} is not a " + std::to_string(k_) + "-subset of [1, " +
                        std::to_string(n_) + "]");
  }
  if (!ranks_.insert(rank(block, n_)).second) {
    throw InvalidDesign("duplicate block {" + to_string(block) + "}");
  }
  blocks_.push_back(std::move(block));
}

bool Design::contains(const Block& block) const {
  return block.fits(n_, k_) && ranks_.contains(rank(block, n_));
}

bool Design::same_sequence(const Design& other) const {
  return n_ == other.n_ && k_ == other.k_ && blocks_ == other.blocks_;
}

bool operator==(const Design& a, const Design& b) {
  return a.n_ == b.n_ && a.k_ == b.k_ && a.ranks_ == b.ranks_;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace

ParsedDesign parse_design(std::istream& in, int n, int k) {
  ParsedDesign out{Design(n, k), {}};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<int> elems;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto next = line.find_first_of(" \t", pos);
      const auto tok = line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (!tok.empty()) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
          throw FormatError(lineno, "non-integer token '" + std::string(tok) + "'");
        }
        if (value < 1 || value > n) {
          throw FormatError(lineno, "element " + std::to_string(value) + " outside [1, " + std::to_string(n) + "]");
        }
        elems.push_back(value);
      }
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (static_cast<int>(elems.size()) != k) {
      throw FormatError(lineno, "expected " + std::to_string(k) + " elements, found " + std::to_string(elems.size()));
    }
    const bool sorted = std::is_sorted(elems.begin(), elems.end());
    Block block;
    try {
      block = Block::canonical(elems);
    } catch (const InvalidDesign&) {
      throw FormatError(lineno, "duplicate element within block");
    }
    if (!sorted) {
      out.warnings.push_back("line " + std::to_string(lineno) + ": block sorted to {" + to_string(block) + "}");
    }
    if (out.design.contains(block)) {
      throw FormatError(lineno, "duplicate block {" + to_string(block) + "}");
    }
    out.design.add(std::move(block));
  }
  return out;
}

ParsedDesign parse_design(std::string_view text, int n, int k) {
  std::istringstream in{std::string(text)};
  return parse_design(in, n, k);
}

void write_design(std::ostream& out, const Design& design) {
  for (const auto& b : design) out << to_string(b) << '\n';
}

std::string serialize_design(const Design& design) {
  std::ostringstream out;
  write_design(out, design);
  return out.str();
}

}  // namespace lotto
