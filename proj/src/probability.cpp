#include "lotto/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lotto/errors.hpp"

namespace lotto {
namespace {

__extension__ using U128 = unsigned __int128;

// Largest number of factors the exact rational path multiplies out.
constexpr Count kExactFactorLimit = 5000;
// Beyond this many log terms the log-space paths switch to lgamma.
constexpr Count kLogTermLimit = 10'000'000;

Probability exact_probability(BigRational r) {
  Probability p;
  p.value = to_double(r);
  p.via = Via::exact_rational;
  p.exact = std::move(r);
  return p;
}

Probability log_space_probability(double log_value) {
  Probability p;
  p.value = std::exp(log_value);
  p.via = Via::log_space;
  return p;
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log C(n, k) as a sum over min(k, n - k) ratios.
double log_binomial_sum(Count n, Count k) {
  k = std::min(k, n - k);
  if (k > kLogTermLimit) return log_binomial(static_cast<double>(n), static_cast<double>(k));
  double sum = 0.0;
  for (Count i = 0; i < k; ++i) sum += std::log(static_cast<double>(n - i) / static_cast<double>(i + 1));
  return sum;
}

void require_no_hit_domain(Count N, Count M, Count v) {
  if (M > N) throw DomainError("qualifying count M exceeds N");
  if (v > N) throw DomainError("ticket count v exceeds N");
}

// Q(x) for real x in [0, N]; used to locate the continuous crossing.
double continuous_safety(Count N, Count M, double x, Method method) {
  const double n = static_cast<double>(N);
  const double m = static_cast<double>(M);
  if (x <= 0.0) return 0.0;
  if (x >= n) return 1.0;
  if (method == Method::approx) return -std::expm1(m * std::log1p(-x / n));
  const double rest = n - m - x + 1.0;  // argument of Gamma(N - M - x + 1)
  if (rest <= 0.0) return 1.0;
  const double log_no_hit = std::lgamma(n - m + 1.0) + std::lgamma(n - x + 1.0) - std::lgamma(n + 1.0) - std::lgamma(rest);
  return -std::expm1(log_no_hit);
}

}  // namespace

double to_double(const BigRational& r) {
  using boost::multiprecision::msb;
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;
  // Scale so the integer quotient carries 64..65 significant bits.
  const long shift = 64 + static_cast<long>(msb(den)) - static_cast<long>(msb(num));
  if (shift > 0) {
    num <<= static_cast<unsigned>(shift);
  } else if (shift < 0) {
    den <<= static_cast<unsigned>(-shift);
  }
  BigInt q;
  BigInt rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  auto bits = q.convert_to<U128>();
  if (rem != 0) bits |= 1;  // sticky bit below the rounding position
  const double value = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return negative ? -value : value;
}

std::string to_string(Via via) {
  switch (via) {
    case Via::exact_rational: return "exact-rational";
    case Via::log_space: return "log-space";
    case Via::closed_form_approximation: return "closed-form-approximation";
  }
  return "?";
}

std::string to_string(Method method) { return method == Method::exact ? "exact" : "approx"; }

std::string to_string(LevelMatch match) { return match == LevelMatch::threshold ? "threshold" : "nearest"; }

Probability Probability::complement() const {
  Probability c = *this;
  if (exact) {
    c.exact = BigRational(1) - *exact;
    c.value = to_double(*c.exact);
  } else {
    c.value = 1.0 - value;
  }
  return c;
}

HitProfile HitProfile::of(int n, int p) {
  if (!(1 <= p && p <= n)) throw DomainError("hit profile requires 1 <= p <= n");
  HitProfile profile;
  profile.n = n;
  profile.p = p;
  profile.total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p));
  for (int t = 0; t <= p; ++t) profile.hits.push_back(hit_count(n, p, t));
  return profile;
}

Count HitProfile::at_least(int t) const {
  if (t < 0 || t > p) throw DomainError("hit order outside [0, p]");
  Count sum = 0;
  for (int i = t; i <= p; ++i) sum = checked_add(sum, hits[static_cast<std::size_t>(i)]);
  return sum;
}

Probability laplace_hit(const HitProfile& profile, int t) {
  if (t < 0 || t > profile.p) throw DomainError("hit order outside [0, p]");
  return exact_probability(BigRational(BigInt(profile.hits[static_cast<std::size_t>(t)]), BigInt(profile.total)));
}

Probability hyper_exact(const HitProfile& profile, const std::map<int, Count>& targets, Count v) {
  const Count N = profile.total;
  if (v > N) throw DomainError("ticket count v exceeds N");
  Count picked = 0;
  Count pool = 0;
  for (const auto& [t, m] : targets) {
    if (t < 0 || t > profile.p) throw DomainError("hit order outside [0, p]");
    const Count M = profile.hits[static_cast<std::size_t>(t)];
    if (m > std::min(M, v)) throw DomainError("target count exceeds min(M_t, v)");
    picked = checked_add(picked, m);
    pool = checked_add(pool, M);
  }
  if (picked > v) throw DomainError("target counts exceed v");
  const Count rest = N - pool;
  const Count rest_pick = v - picked;
  if (rest_pick > rest) return exact_probability(BigRational(0));

  auto small = [](Count n, Count k) { return std::min(k, n - k) <= kExactFactorLimit; };
  bool exact = small(N, v) && small(rest, rest_pick);
  for (const auto& [t, m] : targets) exact = exact && small(profile.hits[static_cast<std::size_t>(t)], m);

  if (exact) {
    BigInt num = binomial_big(rest, rest_pick);
    for (const auto& [t, m] : targets) num *= binomial_big(profile.hits[static_cast<std::size_t>(t)], m);
    return exact_probability(BigRational(num, binomial_big(N, v)));
  }
  if (pool > kLogTermLimit) {
    double log_p = log_binomial(static_cast<double>(rest), static_cast<double>(rest_pick)) -
                   log_binomial(static_cast<double>(N), static_cast<double>(v));
    for (const auto& [t, m] : targets) {
      log_p += log_binomial(static_cast<double>(profile.hits[static_cast<std::size_t>(t)]), static_cast<double>(m));
    }
    return log_space_probability(log_p);
  }
  // C(rest, rest_pick) / C(N, v) as pool factors, each a ratio near 1:
  //   prod_{i < pool - picked} (N - v - i) / (N - i)
  //   * prod_{j < picked} (v - j) / (N - pool + picked - j)
  double log_p = 0.0;
  const double n = static_cast<double>(N);
  const double x = static_cast<double>(v);
  for (Count i = 0; i < pool - picked; ++i) log_p += std::log1p(-x / (n - static_cast<double>(i)));
  for (Count j = 0; j < picked; ++j) {
    log_p += std::log((x - static_cast<double>(j)) / (n - static_cast<double>(pool - picked + j)));
  }
  for (const auto& [t, m] : targets) log_p += log_binomial_sum(profile.hits[static_cast<std::size_t>(t)], m);
  return log_space_probability(log_p);
}

BigRational no_hit_ratio_direct(Count N, Count M, Count v) {
  require_no_hit_domain(N, M, v);
  return BigRational(binomial_big(N - M, v), binomial_big(N, v));
}

BigRational no_hit_ratio_swapped(Count N, Count M, Count v) {
  require_no_hit_domain(N, M, v);
  return BigRational(binomial_big(N - v, M), binomial_big(N, M));
}

double log_no_hit(Count N, Count M, Count v) {
  require_no_hit_domain(N, M, v);
  if (v > N - M) return -INFINITY;
  // prod_{i<f} (1 - g / (N - i)) with (f, g) = (v, M) or, swapped, (M, v).
  const Count f = std::min(v, M);
  const double g = static_cast<double>(std::max(v, M));
  if (f > kLogTermLimit) {
    const double n = static_cast<double>(N);
    return log_binomial(n - static_cast<double>(M), static_cast<double>(v)) - log_binomial(n, static_cast<double>(v));
  }
  double sum = 0.0;
  for (Count i = 0; i < f; ++i) sum += std::log1p(-g / static_cast<double>(N - i));
  return sum;
}

Probability no_hit_exact(Count N, Count M, Count v) {
  require_no_hit_domain(N, M, v);
  if (v > N - M) return exact_probability(BigRational(0));
  const Count f = std::min(v, M);
  if (f > kExactFactorLimit) return log_space_probability(log_no_hit(N, M, v));
  const Count g = std::max(v, M);
  BigInt num = 1;
  BigInt den = 1;
  for (Count i = 0; i < f; ++i) {
    num *= N - g - i;
    den *= N - i;
  }
  return exact_probability(BigRational(num, den));
}

Probability no_hit_approx(Count N, Count M, Count v) {
  require_no_hit_domain(N, M, v);
  Probability p;
  p.via = Via::closed_form_approximation;
  p.value = std::exp(static_cast<double>(M) * std::log1p(-static_cast<double>(v) / static_cast<double>(N)));
  p.regime_warning = 10 * M > N - v;
  return p;
}

Probability safety_at_least_one(Count N, Count M, Count v, Method method) {
  if (method == Method::exact) return no_hit_exact(N, M, v).complement();
  Probability p = no_hit_approx(N, M, v);
  p.value = -std::expm1(static_cast<double>(M) * std::log1p(-static_cast<double>(v) / static_cast<double>(N)));
  return p;
}

Probability jackpot_prob(Count N, Count v) {
  if (N == 0) throw DomainError("N must be positive");
  if (v > N) throw DomainError("ticket count v exceeds N");
  return exact_probability(BigRational(BigInt(v), BigInt(N)));
}

Count min_blocks_for_safety(Count N, Count M, double target, Method method, LevelMatch match) {
  require_no_hit_domain(N, M, 0);
  if (!(target >= 0.0 && target <= 1.0)) throw DomainError("target safety level outside [0, 1]");
  if (target == 0.0) return 0;
  if (M == 0) throw DomainError("no ticket qualifies, so no positive safety level is reachable");
  if (target == 1.0) return method == Method::exact ? N - M + 1 : N;

  // Smallest v in [0, N] with holds(v); holds is monotone and holds(N).
  auto search = [N](auto holds) {
    Count lo = 0;
    Count hi = N;
    while (lo < hi) {
      const Count mid = lo + (hi - lo) / 2;
      if (holds(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  };
  if (match == LevelMatch::threshold) {
    return search([&](Count v) { return safety_at_least_one(N, M, v, method).value >= target; });
  }
  return search([&](Count v) { return continuous_safety(N, M, static_cast<double>(v) + 0.5, method) > target; });
}

SafetyTable safety_table(Count N, Count M, std::span<const double> levels, Method method, LevelMatch match) {
  if (!std::is_sorted(levels.begin(), levels.end())) throw DomainError("safety levels must be ascending");
  const Method other = method == Method::exact ? Method::approx : Method::exact;
  SafetyTable table{N, M, method, match, {}};
  for (double level : levels) {
    SafetyRow row;
    row.level = level;
    row.blocks = min_blocks_for_safety(N, M, level, method, match);
    row.safety = safety_at_least_one(N, M, row.blocks, method);
    row.other_method_blocks = min_blocks_for_safety(N, M, level, other, match);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace lotto
