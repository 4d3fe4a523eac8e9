#include "lotto/simulator.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

#include "lotto/errors.hpp"

namespace lotto {
namespace {

constexpr Count kMaxTicketTable = 10'000'000;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Mask of a uniform p-subset; `pool` is scratch space of size n.
std::uint64_t draw_mask(int n, int p, Rng& rng, std::vector<int>& pool) {
  std::iota(pool.begin(), pool.end(), 1);
  std::uint64_t mask = 0;
  for (int i = 0; i < p; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
    mask |= std::uint64_t{1} << (pool[i] - 1);
  }
  return mask;
}

struct Tally {
  std::vector<Count> best_hit;
};

// Runs trial(i, rng) -> best hit for every i, split across threads. Each
// worker owns a contiguous index range and its own tally; tallies are summed.
template <typename MakeWorker>
std::vector<Count> run_trials(Count trials, std::uint64_t seed, int max_hit, unsigned threads, MakeWorker make) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<Count>(threads, std::max<Count>(1, trials / 1000)));
  std::vector<Tally> tallies(threads, Tally{std::vector<Count>(static_cast<std::size_t>(max_hit) + 1, 0)});

  auto body = [&](unsigned w) {
    auto trial = make();
    const Count begin = trials * w / threads;
    const Count end = trials * (w + 1) / threads;
    for (Count i = begin; i < end; ++i) {
      Rng rng = trial_stream(seed, i);
      ++tallies[w].best_hit[static_cast<std::size_t>(trial(rng))];
    }
  };
  if (threads == 1) {
    body(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(body, w);
  }

  std::vector<Count> total(static_cast<std::size_t>(max_hit) + 1, 0);
  for (const auto& tally : tallies) {
    for (std::size_t h = 0; h < total.size(); ++h) total[h] += tally.best_hit[h];
  }
  return total;
}

SimReport make_report(Count trials, std::uint64_t seed, int threshold, std::vector<Count> best_hit) {
  SimReport report;
  report.trials = trials;
  report.seed = seed;
  report.threshold = threshold;
  for (std::size_t h = static_cast<std::size_t>(threshold); h < best_hit.size(); ++h) report.at_least += best_hit[h];
  report.best_hit = std::move(best_hit);
  return report;
}

}  // namespace

Rng trial_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ index));
}

Block random_draw(int n, int p, Rng& rng) {
  if (n < 1 || n > kMaxGroundSet || p < 0 || p > n) throw DomainError("random_draw requires 0 <= p <= n <= 64");
  std::vector<int> pool(static_cast<std::size_t>(n));
  return block_from_mask(draw_mask(n, p, rng, pool));
}

SimReport simulate_hits(const Design& design, const Scheme& scheme, Count trials, std::uint64_t seed,
                        const SimOptions& options) {
  if (scheme.n != design.n() || scheme.k != design.k()) {
    throw DomainError("scheme " + to_string(scheme) + " does not match the design");
  }
  const auto s = Scheme::make(scheme.n, scheme.k, scheme.p, scheme.t);
  std::vector<std::uint64_t> tickets;
  tickets.reserve(design.size());
  for (const auto& b : design) tickets.push_back(b.mask());
  const int max_hit = std::min(s.k, s.p);

  auto best = run_trials(trials, seed, max_hit, options.threads, [&] {
    return [&, pool = std::vector<int>(static_cast<std::size_t>(s.n))](Rng& rng) mutable {
      const auto drawn = draw_mask(s.n, s.p, rng, pool);
      int top = 0;
      for (auto ticket : tickets) {
        top = std::max(top, std::popcount(ticket & drawn));
        if (top == max_hit) break;
      }
      return top;
    };
  });
  return make_report(trials, seed, s.t, std::move(best));
}

SimReport simulate_random_designs(const Scheme& scheme, Count v, Count trials, std::uint64_t seed,
                                  const SimOptions& options) {
  const auto s = Scheme::make(scheme.n, scheme.k, scheme.p, scheme.t);
  const Count universe = binomial(static_cast<std::uint64_t>(s.n), static_cast<std::uint64_t>(s.k));
  if (universe > kMaxTicketTable) throw DomainError("too many distinct tickets to sample from");
  if (v > universe) throw DomainError("cannot pick more distinct tickets than C(n, k)");

  std::vector<std::uint64_t> tickets(universe);
  {
    std::vector<int> cur(static_cast<std::size_t>(s.k));
    std::iota(cur.begin(), cur.end(), 1);
    std::size_t r = 0;
    do {
      std::uint64_t m = 0;
      for (int e : cur) m |= std::uint64_t{1} << (e - 1);
      tickets[r++] = m;
    } while (next_ksubset(cur, s.n));
  }
  const int max_hit = std::min(s.k, s.p);

  auto best = run_trials(trials, seed, max_hit, options.threads, [&] {
    return [&, pool = std::vector<int>(static_cast<std::size_t>(s.n)), marked = std::vector<char>(universe, 0),
            chosen = std::vector<Count>()](Rng& rng) mutable {
      const auto drawn = draw_mask(s.n, s.p, rng, pool);
      // Floyd's algorithm: v distinct ranks out of [0, universe).
      chosen.clear();
      for (Count j = universe - v; j < universe; ++j) {
        Count r = std::uniform_int_distribution<Count>(0, j)(rng);
        if (marked[r]) r = j;
        marked[r] = 1;
        chosen.push_back(r);
      }
      int top = 0;
      for (auto r : chosen) {
        marked[r] = 0;
        top = std::max(top, std::popcount(tickets[r] & drawn));
      }
      return top;
    };
  });
  return make_report(trials, seed, s.t, std::move(best));
}

}  // namespace lotto
