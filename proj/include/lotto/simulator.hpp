#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lotto/block.hpp"
#include "lotto/combinatorics.hpp"
#include "lotto/design.hpp"

namespace lotto {

/// Random engine used by every simulation: 64-bit Mersenne Twister.
using Rng = std::mt19937_64;

/// Engine for trial `index` of a run seeded with `seed`. Streams depend only
/// on (seed, index), so serial and parallel runs draw identical numbers.
Rng trial_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform p-subset of {1..n} by partial Fisher-Yates shuffle.
Block random_draw(int n, int p, Rng& rng);

struct SimReport {
  Count trials = 0;
  std::uint64_t seed = 0;
  int threshold = 0;
  /// best_hit[h]: trials whose best ticket matched exactly h numbers.
  std::vector<Count> best_hit;
  /// Trials whose best ticket matched at least `threshold` numbers.
  Count at_least = 0;

  double at_least_frequency() const {
    return trials == 0 ? 0.0 : static_cast<double>(at_least) / static_cast<double>(trials);
  }
  friend bool operator==(const SimReport&, const SimReport&) = default;
};

struct SimOptions {
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend
  /// on this value.
  unsigned threads = 0;
};

/// Plays `design` against `trials` random draws of p numbers, recording each
/// draw's best match over all tickets.
SimReport simulate_hits(const Design& design, const Scheme& scheme, Count trials, std::uint64_t seed,
                        const SimOptions& options = {});

/// Like simulate_hits, but every trial buys a fresh set of v distinct random
/// tickets. The at-least frequency estimates the safety level Q(v).
SimReport simulate_random_designs(const Scheme& scheme, Count v, Count trials, std::uint64_t seed,
                                  const SimOptions& options = {});

}  // namespace lotto
