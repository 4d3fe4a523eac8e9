#include "lotto/verifier.hpp"

#include <string>

#include "lotto/errors.hpp"
#include "subset_index.hpp"

namespace lotto {

int intersect_count(const Block& a, const Block& b) noexcept {
  int common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

namespace {

// Walks all m-subsets of {1..n} in lex order, recording the ones `ok` rejects.
template <typename Pred>
VerifyReport census(int n, int m, const VerifyOptions& options, Pred ok) {
  VerifyReport report;
  std::vector<int> cur(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cur[i] = i + 1;
  do {
    ++report.checked;
    if (!ok(std::span<const int>(cur))) {
      ++report.deficient;
      if (report.witnesses.size() < options.witness_cap) report.witnesses.emplace_back(cur);
      if (options.stop_at_first) break;
    }
  } while (next_ksubset(cur, n));
  report.valid = report.deficient == 0;
  return report;
}

}  // namespace

VerifyReport verify_covering(const Design& design, int t, const VerifyOptions& options) {
  if (t < 0 || t > design.k()) {
    throw DomainError("covering threshold t=" + std::to_string(t) + " outside [0, " + std::to_string(design.k()) + "]");
  }
  const auto index = detail::TSubsetIndex::of(design, t);
  return census(design.n(), t, options, [&](std::span<const int> sub) { return index.covered(sub); });
}

VerifyReport verify_lottery(const Design& design, const Scheme& scheme, const VerifyOptions& options) {
  if (scheme.n != design.n() || scheme.k != design.k()) {
    throw DomainError("scheme " + to_string(scheme) + " does not match design over n=" + std::to_string(design.n()) +
                      ", k=" + std::to_string(design.k()));
  }
  const auto checked = Scheme::make(scheme.n, scheme.k, scheme.p, scheme.t);
  // A p-subset meets a block in >= t elements iff they share a t-subset.
  const auto index = detail::TSubsetIndex::of(design, checked.t);
  return census(checked.n, checked.p, options, [&](std::span<const int> drawn) {
    bool served = false;
    for_each_subset_of(drawn, checked.t, [&](std::span<const int> sub) { served = served || index.covered(sub); });
    return served;
  });
}

}  // namespace lotto
