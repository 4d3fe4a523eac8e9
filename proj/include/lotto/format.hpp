#pragma once

#include <string>

#include "lotto/combinatorics.hpp"

namespace lotto {

// Output is locale-independent: dot decimals, comma thousands separators.

/// "13,983,816"
std::string format_count(Count value);

/// Fixed-point rendering with `decimals` digits after the dot.
std::string format_fixed(double value, int decimals);

/// Probability as a percentage, e.g. format_percent(0.0885479, 3) == "8.855%".
std::string format_percent(double probability, int decimals = 1);

}  // namespace lotto
