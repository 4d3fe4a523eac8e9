#pragma once

#include "lotto/block.hpp"
#include "lotto/combinatorics.hpp"
#include "lotto/design.hpp"

namespace lotto {

/// Lexicographic greedy (n, k, t)-covering.
///
/// Candidates are the k-subsets of {1..n} in ascending order. The first pass
/// keeps a candidate only if none of its t-subsets is covered yet, i.e. every
/// later candidate sharing a t-subset with a chosen block is struck out.
/// When that pass leaves t-subsets uncovered, further passes lower the number
/// of new t-subsets a candidate must contribute, C(k,t) - 1 down to 1, until
/// the design covers. Deterministic; the first block is always {1..k}.
Design greedy_cover(int n, int k, int t);

/// Orbit of `initial` under e -> e + 1 (n wraps to 1), stopping before the
/// first repeat of `initial`. At most n blocks.
Design cyclic_design(int n, int k, const Block& initial);

/// Ticket count that guarantees a >= t hit with arbitrary distinct tickets:
/// C(n, p) - sum_{t' >= t} hit_count(n, p, t') + 1. Requires k == p.
Count saturation_bound(const Scheme& scheme);

}  // namespace lotto
