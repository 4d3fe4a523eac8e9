#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "lotto/block.hpp"
#include "lotto/combinatorics.hpp"
#include "lotto/design.hpp"

namespace lotto {

struct VerifyOptions {
  static constexpr std::size_t kAllWitnesses = std::numeric_limits<std::size_t>::max();

  /// Maximum number of witnesses kept in the report.
  std::size_t witness_cap = 10;
  /// Stop at the first uncovered subset instead of taking a full census.
  bool stop_at_first = false;
};

/// Outcome of a covering or lottery check.
///
/// `checked` is C(n, t) (covering) or C(n, p) (lottery) in census mode, and
/// the number examined so far in early-exit mode. Witnesses are in lex order.
struct VerifyReport {
  bool valid = false;
  Count checked = 0;
  Count deficient = 0;
  std::vector<Block> witnesses;
};

/// |a ∩ b| for ascending blocks.
int intersect_count(const Block& a, const Block& b) noexcept;

/// Valid iff every t-subset of {1..n} lies inside some block.
VerifyReport verify_covering(const Design& design, int t, const VerifyOptions& options = {});

/// Valid iff every p-subset of {1..n} meets some block in >= t elements.
VerifyReport verify_lottery(const Design& design, const Scheme& scheme, const VerifyOptions& options = {});

}  // namespace lotto
