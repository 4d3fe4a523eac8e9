#pragma once

#include <cstdint>
#include <optional>

#include "lotto/combinatorics.hpp"
#include "lotto/design.hpp"

namespace lotto {

/// What a design has to achieve: cover every t-subset, or meet every
/// p-subset in at least t elements.
struct Requirement {
  enum class Kind { covering, lottery };
  Kind kind = Kind::covering;
  int p = 0;  // lottery only
  int t = 0;

  static Requirement covering(int t) { return {Kind::covering, 0, t}; }
  static Requirement lottery(int p, int t) { return {Kind::lottery, p, t}; }
  static Requirement lottery(const Scheme& s) { return {Kind::lottery, s.p, s.t}; }
};

/// True when `design` satisfies `req`.
bool satisfies(const Design& design, const Requirement& req);

struct ExhaustiveOptions {
  /// Maximum number of search nodes (partial designs) visited.
  Count budget = 10'000'000;
  /// Skip subtrees that provably cannot complete. The returned design is the
  /// same either way.
  bool prune = true;
  /// When set, receives the number of nodes visited.
  Count* nodes_visited = nullptr;
};

/// Smallest design of at most `max_size` blocks meeting `req` over (n, k).
///
/// Sizes are tried in increasing order; within a size, block combinations are
/// visited in lex order of block ranks and the first valid one is returned.
/// Empty when no design within the bound exists. Throws BudgetExceeded.
std::optional<Design> exhaustive_min(int n, int k, const Requirement& req, std::size_t max_size,
                                     const ExhaustiveOptions& options = {});

inline std::optional<Design> exhaustive_min_lottery(const Scheme& scheme, std::size_t max_size,
                                                    const ExhaustiveOptions& options = {}) {
  return exhaustive_min(scheme.n, scheme.k, Requirement::lottery(scheme), max_size, options);
}

inline std::optional<Design> exhaustive_min_cover(int n, int k, int t, std::size_t max_size,
                                                  const ExhaustiveOptions& options = {}) {
  return exhaustive_min(n, k, Requirement::covering(t), max_size, options);
}

/// Geometric cooling schedule for local_search_reduce: the temperature at
/// step i is initial_temperature * decay^i.
struct AnnealOptions {
  double initial_temperature = 1.0;
  double decay = 0.999;
};

/// Remove-then-repair local search.
///
/// Each step drops a random block, patches the uncovered targets greedily
/// (the candidate serving most of them, lowest rank on ties, never the block
/// just dropped unless nothing else helps), then discards blocks made
/// redundant. Moves that do not grow the design are always taken; growing
/// moves are taken with probability exp(-growth / temperature). Returns the
/// smallest design seen, which is `start` itself when nothing smaller turns
/// up. Throws InvalidDesign if `start` does not satisfy `req`.
Design local_search_reduce(const Design& start, const Requirement& req, std::uint64_t steps, std::uint64_t seed,
                           const AnnealOptions& anneal = {});

}  // namespace lotto
