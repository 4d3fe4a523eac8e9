#pragma once

#include <cstdint>
#include <vector>

#include "lotto/reducer.hpp"

namespace lotto::detail {

// Bipartite incidence between every k-subset of {1..n} (by rank) and the
// targets it serves: t-subsets it contains (covering) or p-subsets it meets
// in >= t elements (lottery).
struct CoverageModel {
  int n = 0;
  int k = 0;
  std::size_t num_blocks = 0;
  std::size_t num_targets = 0;
  std::vector<std::vector<std::uint32_t>> serves;     // block rank -> targets
  std::vector<std::vector<std::uint32_t>> served_by;  // target -> block ranks

  static CoverageModel build(int n, int k, const Requirement& req);
};

}  // namespace lotto::detail
