#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lotto/combinatorics.hpp"

namespace lotto {

using BigRational = boost::multiprecision::cpp_rational;

/// Correctly rounded conversion, safe for numerators and denominators far
/// beyond the double range.
double to_double(const BigRational& r);

/// How a probability was obtained. Reports never pass an approximation off
/// as exact.
enum class Via { exact_rational, log_space, closed_form_approximation };

std::string to_string(Via via);

struct Probability {
  double value = 0.0;
  Via via = Via::exact_rational;
  /// Present iff via == exact_rational.
  std::optional<BigRational> exact;
  /// Set by the closed-form approximation when M is not << N - v.
  bool regime_warning = false;

  Probability complement() const;
};

/// Which formula a safety computation uses: the hypergeometric no-hit ratio
/// or its (1 - v/N)^M approximation.
enum class Method { exact, approx };

std::string to_string(Method method);

/// N = C(n, p) and the per-order hit counts M_0..M_p for a p/n lottery.
struct HitProfile {
  int n = 0;
  int p = 0;
  Count total = 0;
  std::vector<Count> hits;

  static HitProfile of(int n, int p);
  /// sum_{t' >= t} M_t', the tickets that qualify for a >= t hit.
  Count at_least(int t) const;
};

/// Laplace probability M_t / N that a single ticket scores exactly t.
Probability laplace_hit(const HitProfile& profile, int t);

/// Multivariate hypergeometric probability that v distinct random tickets
/// contain exactly targets[t] tickets of each listed hit order t.
Probability hyper_exact(const HitProfile& profile, const std::map<int, Count>& targets, Count v);

/// Exact ratio C(N - M, v) / C(N, v) computed from the binomials themselves.
BigRational no_hit_ratio_direct(Count N, Count M, Count v);
/// The same ratio in swapped form C(N - v, M) / C(N, M).
BigRational no_hit_ratio_swapped(Count N, Count M, Count v);
/// Natural log of the no-hit ratio, evaluated as a sum of log1p terms.
double log_no_hit(Count N, Count M, Count v);

/// Probability that none of v distinct tickets is among the M qualifying
/// ones. Exact rational when min(v, M) is moderate, otherwise log-space.
Probability no_hit_exact(Count N, Count M, Count v);

/// (1 - v/N)^M.
Probability no_hit_approx(Count N, Count M, Count v);

/// 1 - no_hit under the chosen method.
Probability safety_at_least_one(Count N, Count M, Count v, Method method);

/// v / N.
Probability jackpot_prob(Count N, Count v);

/// How a target safety level maps to a ticket count.
enum class LevelMatch {
  /// Smallest v with Q(v) >= target.
  threshold,
  /// Nearest integer to the real v solving Q(v) = target, with Q extended
  /// continuously (Gamma functions for the exact ratio). This is how the
  /// printed safety tables round.
  nearest,
};

std::string to_string(LevelMatch match);

/// Ticket count for a target safety level in [0, 1]. A target of exactly 1
/// asks for certainty: the smallest v whose no-hit probability is exactly 0.
/// Throws DomainError if the target can never be reached (M == 0).
Count min_blocks_for_safety(Count N, Count M, double target, Method method, LevelMatch match);

struct SafetyRow {
  double level = 0.0;
  Count blocks = 0;
  Probability safety;
  /// Ticket count the other method would give for the same level.
  Count other_method_blocks = 0;

  bool method_sensitive() const { return other_method_blocks != blocks; }
};

struct SafetyTable {
  Count total = 0;
  Count qualifying = 0;
  Method method = Method::exact;
  LevelMatch match = LevelMatch::threshold;
  std::vector<SafetyRow> rows;
};

/// One row per level (ascending) via min_blocks_for_safety.
SafetyTable safety_table(Count N, Count M, std::span<const double> levels, Method method, LevelMatch match);

}  // namespace lotto
