#include "lotto/reducer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "coverage_model.hpp"
#include "lotto/errors.hpp"
#include "lotto/verifier.hpp"

namespace lotto {
namespace detail {
namespace {

constexpr std::size_t kMaxModelEntries = 100'000'000;

std::vector<int> merged(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

}  // namespace

CoverageModel CoverageModel::build(int n, int k, const Requirement& req) {
  if (n < 1 || n > kMaxGroundSet || k < 1 || k > n) throw DomainError("model requires 1 <= k <= n <= 64");
  const int m = req.kind == Requirement::Kind::covering ? req.t : req.p;
  if (req.kind == Requirement::Kind::covering && (req.t < 0 || req.t > k)) {
    throw DomainError("covering threshold must be in [0, k]");
  }
  if (req.kind == Requirement::Kind::lottery) Scheme::make(n, k, req.p, req.t);

  CoverageModel model;
  model.n = n;
  model.k = k;
  model.num_blocks = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  model.num_targets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));

  Count per_block = 0;
  if (req.kind == Requirement::Kind::covering) {
    per_block = binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(req.t));
  } else {
    for (int j = req.t; j <= std::min(k, req.p); ++j) {
      per_block += binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(j)) *
                   binomial(static_cast<std::uint64_t>(n - k), static_cast<std::uint64_t>(req.p - j));
    }
  }
  if (model.num_targets > UINT32_MAX || model.num_blocks > UINT32_MAX ||
      model.num_blocks * per_block > kMaxModelEntries) {
    throw BudgetExceeded("coverage model for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         " is too large for desk-scale search");
  }

  model.serves.resize(model.num_blocks);
  model.served_by.resize(model.num_targets);
  std::vector<int> block(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) block[i] = i + 1;
  std::size_t r = 0;
  do {
    auto& out = model.serves[r];
    out.reserve(per_block);
    if (req.kind == Requirement::Kind::covering) {
      for_each_subset_of(block, req.t, [&](std::span<const int> sub) {
        out.push_back(static_cast<std::uint32_t>(rank(sub, n)));
      });
    } else {
      std::vector<int> rest;
      for (int e = 1; e <= n; ++e) {
        if (!std::binary_search(block.begin(), block.end(), e)) rest.push_back(e);
      }
      for (int j = req.t; j <= std::min(k, req.p); ++j) {
        for_each_subset_of(block, j, [&](std::span<const int> inside) {
          for_each_subset_of(rest, req.p - j, [&](std::span<const int> outside) {
            out.push_back(static_cast<std::uint32_t>(rank(merged(inside, outside), n)));
          });
        });
      }
      std::sort(out.begin(), out.end());
    }
    for (auto target : out) model.served_by[target].push_back(static_cast<std::uint32_t>(r));
    ++r;
  } while (next_ksubset(block, n));
  return model;
}

}  // namespace detail

bool satisfies(const Design& design, const Requirement& req) {
  VerifyOptions quick;
  quick.stop_at_first = true;
  quick.witness_cap = 0;
  if (req.kind == Requirement::Kind::covering) return verify_covering(design, req.t, quick).valid;
  return verify_lottery(design, Scheme::make(design.n(), design.k(), req.p, req.t), quick).valid;
}

namespace {

// Depth-first search over block combinations of a fixed size, in lex order of
// block ranks, on packed target bitsets.
class ExactSearch {
 public:
  ExactSearch(const detail::CoverageModel& model, const ExhaustiveOptions& options)
      : model_(model), options_(options), words_((model.num_targets + 63) / 64) {
    masks_.assign(model.num_blocks * words_, 0);
    for (std::size_t b = 0; b < model.num_blocks; ++b) {
      for (auto target : model.serves[b]) masks_[b * words_ + target / 64] |= std::uint64_t{1} << (target % 64);
      max_gain_ = std::max(max_gain_, model.serves[b].size());
    }
    // reach_[i] = union of masks of blocks i..end
    reach_.assign((model.num_blocks + 1) * words_, 0);
    for (std::size_t b = model.num_blocks; b-- > 0;) {
      for (std::size_t w = 0; w < words_; ++w) {
        reach_[b * words_ + w] = reach_[(b + 1) * words_ + w] | masks_[b * words_ + w];
      }
    }
    full_.assign(words_, ~std::uint64_t{0});
    if (model.num_targets % 64 != 0) full_.back() = (std::uint64_t{1} << (model.num_targets % 64)) - 1;
  }

  std::optional<std::vector<std::size_t>> run(std::size_t size) {
    size_ = size;
    acc_.assign((size + 1) * words_, 0);
    chosen_.assign(size, 0);
    if (dfs(0, 0)) return chosen_;
    return std::nullopt;
  }

  Count nodes() const { return nodes_; }

 private:
  bool complete(std::size_t depth) const {
    const auto* a = &acc_[depth * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      if (a[w] != full_[w]) return false;
    }
    return true;
  }

  bool hopeless(std::size_t depth, std::size_t next) const {
    const auto* a = &acc_[depth * words_];
    const auto* reach = &reach_[next * words_];
    std::size_t missing = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      const auto uncovered = full_[w] & ~a[w];
      if (uncovered & ~reach[w]) return true;
      missing += static_cast<std::size_t>(std::popcount(uncovered));
    }
    return missing > (size_ - depth) * max_gain_;
  }

  bool dfs(std::size_t depth, std::size_t start) {
    if (++nodes_ > options_.budget) {
      throw BudgetExceeded("exhaustive search exceeded " + std::to_string(options_.budget) + " nodes");
    }
    if (depth == size_) return complete(depth);
    if (options_.prune && hopeless(depth, start)) return false;
    const std::size_t last = model_.num_blocks - (size_ - depth);
    for (std::size_t i = start; i <= last; ++i) {
      const auto* prev = &acc_[depth * words_];
      auto* next = &acc_[(depth + 1) * words_];
      const auto* m = &masks_[i * words_];
      for (std::size_t w = 0; w < words_; ++w) next[w] = prev[w] | m[w];
      chosen_[depth] = i;
      if (dfs(depth + 1, i + 1)) return true;
    }
    return false;
  }

  const detail::CoverageModel& model_;
  const ExhaustiveOptions& options_;
  std::size_t words_;
  std::size_t size_ = 0;
  std::size_t max_gain_ = 0;
  Count nodes_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint64_t> full_;
  std::vector<std::uint64_t> acc_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<Design> exhaustive_min(int n, int k, const Requirement& req, std::size_t max_size,
                                     const ExhaustiveOptions& options) {
  const auto model = detail::CoverageModel::build(n, k, req);
  ExactSearch search(model, options);
  std::optional<Design> found;
  const std::size_t top = std::min(max_size, model.num_blocks);
  try {
    for (std::size_t size = 1; size <= top && !found; ++size) {
      if (auto pick = search.run(size)) {
        Design d(n, k);
        for (auto r : *pick) d.add(unrank(r, n, k));
        found = std::move(d);
      }
    }
  } catch (...) {
    if (options.nodes_visited) *options.nodes_visited = search.nodes();
    throw;
  }
  if (options.nodes_visited) *options.nodes_visited = search.nodes();
  return found;
}

namespace {

class LocalSearch {
 public:
  LocalSearch(const detail::CoverageModel& model, const Design& start)
      : model_(model), count_(model.num_targets, 0), score_(model.num_blocks, 0) {
    for (const auto& b : start) add(static_cast<std::uint32_t>(rank(b, model.n)));
    for (auto c : count_) {
      if (c == 0) throw InvalidDesign("start design does not satisfy the requirement");
    }
  }

  const std::vector<std::uint32_t>& blocks() const { return blocks_; }

  // One remove / repair / prune move. `victim` indexes blocks().
  void perturb(std::size_t victim, std::size_t prune_offset) {
    const auto dropped = blocks_[victim];
    remove_at(victim);
    repair(dropped);
    prune(prune_offset);
  }

  struct Snapshot {
    std::vector<std::uint32_t> blocks;
    std::vector<std::uint32_t> count;
  };
  Snapshot save() const { return {blocks_, count_}; }
  void restore(const Snapshot& s) {
    blocks_ = s.blocks;
    count_ = s.count;
  }

 private:
  void add(std::uint32_t b) {
    blocks_.push_back(b);
    for (auto target : model_.serves[b]) ++count_[target];
  }

  void remove_at(std::size_t i) {
    const auto b = blocks_[i];
    blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto target : model_.serves[b]) --count_[target];
  }

  void repair(std::uint32_t tabu) {
    std::vector<std::uint32_t> deficient;
    for (auto target : model_.serves[tabu]) {
      if (count_[target] == 0) deficient.push_back(target);
    }
    while (!deficient.empty()) {
      std::vector<std::uint32_t> touched;
      for (auto target : deficient) {
        for (auto b : model_.served_by[target]) {
          if (score_[b]++ == 0) touched.push_back(b);
        }
      }
      std::uint32_t best = UINT32_MAX;
      std::uint32_t best_score = 0;
      for (auto b : touched) {
        if (b != tabu && (score_[b] > best_score || (score_[b] == best_score && b < best))) {
          best = b;
          best_score = score_[b];
        }
        score_[b] = 0;
      }
      if (best == UINT32_MAX) best = tabu;  // only the dropped block serves these
      add(best);
      std::erase_if(deficient, [&](std::uint32_t target) { return count_[target] > 0; });
    }
  }

  void prune(std::size_t offset) {
    const std::size_t size = blocks_.size();
    if (size == 0) return;
    std::vector<std::uint32_t> order;
    order.reserve(size);
    for (std::size_t i = 0; i < size; ++i) order.push_back(blocks_[(offset + i) % size]);
    for (auto b : order) {
      const auto& targets = model_.serves[b];
      const bool redundant = std::all_of(targets.begin(), targets.end(), [&](auto t) { return count_[t] >= 2; });
      if (redundant) {
        remove_at(static_cast<std::size_t>(std::find(blocks_.begin(), blocks_.end(), b) - blocks_.begin()));
      }
    }
  }

  const detail::CoverageModel& model_;
  std::vector<std::uint32_t> blocks_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> score_;
};

}  // namespace

Design local_search_reduce(const Design& start, const Requirement& req, std::uint64_t steps, std::uint64_t seed,
                           const AnnealOptions& anneal) {
  if (!satisfies(start, req)) throw InvalidDesign("start design does not satisfy the requirement");
  if (steps == 0) return start;

  const auto model = detail::CoverageModel::build(start.n(), start.k(), req);
  LocalSearch search(model, start);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::uint32_t> best;
  std::size_t best_size = start.size();
  double temperature = anneal.initial_temperature;

  for (std::uint64_t step = 0; step < steps; ++step, temperature *= anneal.decay) {
    const std::size_t size = search.blocks().size();
    const auto before = search.save();
    const std::size_t victim = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
    const std::size_t offset = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
    search.perturb(victim, offset);

    const double growth = static_cast<double>(search.blocks().size()) - static_cast<double>(size);
    if (growth > 0 && !(temperature > 0 && unit(rng) < std::exp(-growth / temperature))) {
      search.restore(before);
      continue;
    }
    if (search.blocks().size() < best_size) {
      best = search.blocks();
      best_size = best.size();
    }
  }

  if (best.empty()) return start;
  Design out(start.n(), start.k());
  for (auto r : best) out.add(unrank(r, start.n(), start.k()));
  return out;
}

}  // namespace lotto
