// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lotto/combinatorics.hpp"
#include "lotto/constructor.hpp"
#include "lotto/design.hpp"
#include "lotto/format.hpp"
#include "lotto/probability.hpp"
#include "lotto/reducer.hpp"
#include "lotto/simulator.hpp"
#include "lotto/verifier.hpp"
#include "oracles.hpp"

using namespace lotto;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

std::string list(const std::vector<Count>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + format_count(values[i]);
  return s;
}

Design fixture(const std::string& name, int n, int k) {
  Design d(n, k);
  for (const auto& b : oracle::read_blocks(std::string(LOTTO_TEST_DATA) + "/" + name)) d.add(Block(b));
  return d;
}

std::vector<oracle::Mask> masks(const Design& d) {
  std::vector<oracle::Mask> out;
  for (const auto& b : d) out.push_back(b.mask());
  return out;
}

// 1
Outcome counting_constants() {
  Outcome o;
  o.expect(binomial(49, 6) == 13'983'816, "binomial(49,6)");
  o.expect(binomial(15, 6) == 5'005, "binomial(15,6)");
  o.expect(binomial(7, 3) == 35, "binomial(7,3)");
  o.expect(mce(49, 6, 3) == 15'180, "mce(49,6,3)");
  o.expect(mce(49, 6, 4) == 990, "mce(49,6,4)");
  o.expect(mce(49, 6, 5) == 44, "mce(49,6,5)");
  o.expect(mce(15, 3, 2) == 13, "mce(15,3,2)");
  for (auto [n, k] : {std::pair{49, 6}, {15, 6}, {7, 3}}) {
    o.expect(BigInt(binomial(n, k)) == oracle::pascal(n, k), "Pascal oracle " + std::to_string(n));
  }
  o.note("C(49,6) = " + format_count(binomial(49, 6)) + ", mce(49,6,3..5) = " +
         list({mce(49, 6, 3), mce(49, 6, 4), mce(49, 6, 5)}));
  return o;
}

// 2
Outcome hit_counts() {
  Outcome o;
  std::vector<Count> h7;
  for (int t = 0; t <= 3; ++t) h7.push_back(hit_count(7, 3, t));
  o.expect(h7 == std::vector<Count>{4, 18, 12, 1}, "hit_count(7,3,.)");
  o.expect(hit_count(49, 6, 5) == 258, "hit_count(49,6,5)");
  o.expect(hit_count(15, 6, 5) == 54, "hit_count(15,6,5)");
  int pairs = 0;
  for (int n = 1; n <= 50; ++n) {
    for (int p = 1; p <= n; ++p) {
      oracle::Big sum = 0;
      for (int t = 0; t <= p; ++t) sum += oracle::Big(hit_count(n, p, t));
      o.expect(sum == oracle::pascal(n, p), "sum identity n=" + std::to_string(n) + " p=" + std::to_string(p));
      ++pairs;
    }
  }
  o.note("(7,3): " + list(h7) + "; sum identity on " + std::to_string(pairs) + " (n,p) pairs");
  return o;
}

// 3
Outcome saturation_bounds() {
  Outcome o;
  const auto a = saturation_bound(Scheme::make(7, 3, 3, 2));
  const auto b = saturation_bound(Scheme::make(49, 6, 6, 3));
  o.expect(a == 23, "(7,3,3,2)");
  o.expect(b == 13'723'193, "(49,6,6,3)");
  o.note("(7,3,3,2) -> " + format_count(a) + ", (49,6,6,3) -> " + format_count(b));
  return o;
}

// 4
Outcome greedy_small() {
  Outcome o;
  const auto d = greedy_cover(7, 3, 2);
  const Design expected(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
  o.expect(d.same_sequence(expected), "sequence");
  o.note(std::to_string(d.size()) + " blocks in the expected order");
  return o;
}

// 5
Outcome cyclic() {
  Outcome o;
  const Design l(7, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {1, 6, 7}, {1, 2, 7}});
  const Design c(7, 3, {{1, 2, 6}, {2, 3, 7}, {1, 3, 4}, {2, 4, 5}, {3, 5, 6}, {4, 6, 7}, {1, 5, 7}});
  o.expect(cyclic_design(7, 3, Block{1, 2, 3}).same_sequence(l), "initial {1,2,3}");
  o.expect(cyclic_design(7, 3, Block{1, 2, 6}).same_sequence(c), "initial {1,2,6}");
  o.note("both seven-block orbits match");
  return o;
}

// 6
Outcome verification_fixtures() {
  Outcome o;
  const auto ld = fixture("ld_7_3_3_2.txt", 7, 3);
  o.expect(ld.size() == 4 && verify_lottery(ld, Scheme::make(7, 3, 3, 2)).valid, "LD(7,3,3,2) 4 blocks");

  const auto cyc = fixture("cyclic_7_3_123.txt", 7, 3);
  const auto rc = verify_covering(cyc, 2, {VerifyOptions::kAllWitnesses, false});
  bool has14 = false;
  for (const auto& w : rc.witnesses) has14 = has14 || w == Block{1, 4};
  o.expect(!rc.valid && has14, "cyclic {1,2,3} witness {1,4}");

  const auto big = fixture("cover_15_6_5.txt", 15, 6);
  const auto rb = verify_covering(big, 5);
  o.expect(big.size() == 578, "578 blocks");
  o.expect(rb.valid && rb.checked == 3'003 && rb.deficient == 0, "(15,6,5) covering");
  o.expect(oracle::uncovered(masks(big), 15, 5).empty(), "brute-force recheck");

  const auto verbatim = fixture("cover_15_6_5_verbatim.txt", 15, 6);
  const auto rv = verify_covering(verbatim, 5);
  o.note("LD valid; cyclic missing " + std::to_string(rc.deficient) + " pairs incl. {1,4}; 578 blocks: " +
         format_count(rb.checked) + " checked, " + format_count(rb.deficient) +
         " missing (corrected transcription, 2 blocks; as printed: " + format_count(rv.deficient) + " missing)");
  return o;
}

// 7
Outcome exhaustive_oracles() {
  Outcome o;
  const auto start = Clock::now();
  Count nodes_l = 0, nodes_c = 0;
  ExhaustiveOptions ol, oc;
  ol.nodes_visited = &nodes_l;
  oc.nodes_visited = &nodes_c;
  const auto lottery = exhaustive_min_lottery(Scheme::make(7, 3, 3, 2), 23, ol);
  const auto cover = exhaustive_min_cover(7, 3, 2, 35, oc);
  o.expect(lottery && lottery->size() == 4 && verify_lottery(*lottery, Scheme::make(7, 3, 3, 2)).valid,
           "L(7,3,3,2) = 4");
  o.expect(cover && cover->size() == 7 && verify_covering(*cover, 2).valid, "C(7,3,2) = 7");
  o.expect(!exhaustive_min_lottery(Scheme::make(7, 3, 3, 2), 3), "no lottery design with 3 blocks");
  o.expect(!exhaustive_min_cover(7, 3, 2, 6), "no covering with 6 blocks");
  // Independent sweep over every block combination.
  const int bl = oracle::brute_minimum(7, 3, oracle::subsets(7, 3),
                                       [](oracle::Mask b, oracle::Mask d) { return std::popcount(b & d) >= 2; }, 7);
  const int bc = oracle::brute_minimum(7, 3, oracle::subsets(7, 2),
                                       [](oracle::Mask b, oracle::Mask s) { return (b & s) == s; }, 7);
  o.expect(bl == 4 && bc == 7, "brute-force sweep");
  const double secs = seconds_since(start);
  o.expect(secs < 30.0, "runtime");
  o.note("lottery min 4 (" + format_count(nodes_l) + " nodes), covering min 7 (" + format_count(nodes_c) +
         " nodes), " + fmt("%.2f s", secs));
  return o;
}

// 8
Outcome probability_regressions() {
  Outcome o;
  const Count N49 = 13'983'816;
  const auto jackpot49 = format_percent(jackpot_prob(N49, 5005).value, 3);
  const auto safety49 = format_percent(safety_at_least_one(N49, 259, 5005, Method::approx).value, 3);
  const auto jackpot15 = format_percent(jackpot_prob(5005, 569).value, 1);
  const auto safety15 = format_percent(safety_at_least_one(5005, 55, 569, Method::approx).value, 1);
  o.expect(jackpot49 == "0.036%", "jackpot 5005/C(49,6)");
  o.expect(safety49 == "8.855%", "5-hit safety at 5005 of 49");
  o.expect(jackpot15 == "11.4%", "jackpot 569/5005");
  o.expect(safety15 == "99.9%", "5-hit safety at 569 of 15");

  const std::vector<double> l1{0.765, 0.860, 0.954, 0.975, 0.993, 0.999, 1.0};
  std::vector<Count> t1;
  for (const auto& row : safety_table(35, 13, l1, Method::exact, LevelMatch::nearest).rows) {
    t1.push_back(row.blocks);
    o.expect(format_percent(row.safety.value, 1) == format_percent(row.level, 1), "(7,3,3,2) level " +
                                                                                      format_percent(row.level, 1));
  }
  o.expect(t1 == std::vector<Count>{3, 4, 6, 7, 9, 12, 23}, "(7,3,3,2) blocks");

  const std::vector<double> l2{0.009, 0.09, 0.9, 0.99, 0.999};
  std::vector<Count> t15, t49;
  for (const auto& row : safety_table(5005, 55, l2, Method::approx, LevelMatch::nearest).rows) t15.push_back(row.blocks);
  for (const auto& row : safety_table(N49, 259, l2, Method::approx, LevelMatch::nearest).rows) t49.push_back(row.blocks);
  o.expect(t15 == std::vector<Count>{1, 9, 205, 402, 591}, "(15,6,6,5) blocks");
  o.expect(t49 == std::vector<Count>{488, 5'091, 123'769, 246'443, 368'031}, "(49,6,6,5) blocks");
  o.note(jackpot49 + ", " + safety49 + ", " + jackpot15 + ", " + safety15 + "; (7,3,3,2): " + list(t1) + "; (15|49,6,6,5): " + list(t15) +
         " / " + list(t49));
  return o;
}

// 9
Outcome no_hit_identity() {
  Outcome o;
  std::mt19937_64 rng(1961);
  int checked = 0;
  auto check = [&](Count N, Count M, Count v) {
    const auto direct = no_hit_ratio_direct(N, M, v);
    const auto swapped = no_hit_ratio_swapped(N, M, v);
    o.expect(direct == swapped, "(" + std::to_string(N) + "," + std::to_string(M) + "," + std::to_string(v) + ")");
    ++checked;
  };
  for (int i = 0; i < 100; ++i) {
    const Count N = std::uniform_int_distribution<Count>(1, 10'000)(rng);
    const Count M = std::uniform_int_distribution<Count>(0, N)(rng);
    const Count v = std::uniform_int_distribution<Count>(0, N)(rng);
    check(N, M, v);
  }
  check(5005, 55, 569);
  o.expect(no_hit_ratio_direct(5005, 55, 569) == oracle::no_hit(5005, 55, 569), "oracle at (5005,55,569)");
  o.note(std::to_string(checked) + " triples equal as exact rationals");
  return o;
}

// 10
Outcome approximation_band() {
  Outcome o;
  std::string detail;
  for (Count v : {205, 402, 569, 591}) {
    const double exact = to_double(oracle::no_hit(5005, 55, v));
    const double lib = no_hit_exact(5005, 55, v).value;
    const double approx = no_hit_approx(5005, 55, v).value;
    const double gap = std::abs(exact - approx);
    o.expect(gap < 5e-3, "v=" + std::to_string(v));
    o.expect(std::abs(lib - exact) <= 1e-12 * exact, "library exact v=" + std::to_string(v));
    detail += (detail.empty() ? "" : ", ") + std::to_string(v) + ": " + fmt("%.2e", gap);
  }
  o.note("|exact - approx| " + detail);
  return o;
}

// 11
Outcome greedy_large() {
  Outcome o;
  const auto start = Clock::now();
  const auto d = greedy_cover(15, 6, 5);
  const double build = seconds_since(start);
  const auto r = verify_covering(d, 5);
  o.expect(r.valid, "covers");
  o.expect(d.size() <= binomial(15, 6), "at most C(15,6) blocks");
  o.expect(build < 10.0, "runtime");
  const char* bracket = d.size() < 548 ? "below" : d.size() <= 578 ? "inside" : "above";
  o.note(format_count(d.size()) + " blocks, " + bracket + " the bracket [548, 578], " +
         (d.size() > 569 ? "+" : "") + std::to_string(static_cast<long long>(d.size()) - 569) + " vs 569, " +
         fmt("%.2f s", build));
  return o;
}

// 12
Outcome simulation() {
  Outcome o;
  const Count trials = 100'000;
  const auto big = fixture("cover_15_6_5.txt", 15, 6);
  const auto s15 = Scheme::make(15, 6, 6, 5);
  const auto fixed = simulate_hits(big, s15, trials, 2024);
  o.expect(fixed.at_least == trials, "578-block design");

  auto within = [&](const SimReport& r, double q, const std::string& what) {
    const double sigma = std::sqrt(q * (1 - q) / static_cast<double>(r.trials));
    const double dev = std::abs(r.at_least_frequency() - q);
    o.expect(dev <= 3 * sigma, what);
    return fmt("%.5f", r.at_least_frequency()) + " vs " + fmt("%.5f", q) + " (" + fmt("%.1f", sigma > 0 ? dev / sigma : 0) +
           " sigma)";
  };
  const double q569 = 1.0 - to_double(*no_hit_exact(5005, 55, 569).exact);
  const auto r569 = simulate_random_designs(s15, 569, trials, 2024);
  std::string detail = "578 blocks: " + fmt("%.6f", fixed.at_least_frequency()) + "; random 569: " +
                       within(r569, q569, "random 569-block sets");

  const auto s7 = Scheme::make(7, 3, 3, 2);
  for (Count v : {3, 7, 12}) {
    const double q = 1.0 - to_double(*no_hit_exact(35, 13, v).exact);
    const auto r = simulate_random_designs(s7, v, trials, 2024 + v);
    detail += "; v=" + std::to_string(v) + ": " + within(r, q, "(7,3,3,2) v=" + std::to_string(v));
  }
  o.note(detail);
  return o;
}

// 13
Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(13);
  int implications = 0, greedy = 0, roundtrips = 0, seeded = 0;

  // A covering is a lottery design for every p >= t.
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int t = 1; t <= k; ++t) {
        if (binomial(n, k) > 1000) continue;
        const auto d = greedy_cover(n, k, t);
        for (int p = t; p <= n; ++p) {
          o.expect(verify_lottery(d, Scheme::make(n, k, p, t)).valid, "covering => lottery");
          ++implications;
        }
      }
    }
  }

  // Greedy output is a covering, checked by brute force.
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int t = 0; t <= k; ++t) {
        o.expect(oracle::uncovered(masks(greedy_cover(n, k, t)), n, t).empty(), "greedy validity");
        ++greedy;
      }
    }
  }

  // Parse and serialize round-trip.
  for (int i = 0; i < 500; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    Design d(n, k);
    const int want = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int j = 0; j < want; ++j) {
      auto b = random_draw(n, k, rng);
      if (!d.contains(b)) d.add(b);
    }
    const auto text = serialize_design(d);
    const auto back = parse_design(text, n, k);
    o.expect(back.design.same_sequence(d) && serialize_design(back.design) == text, "round-trip");
    ++roundtrips;
  }

  // Seeded operations repeat exactly, and thread count does not matter.
  const auto cyc = cyclic_design(7, 3, Block{1, 2, 3});
  const auto s = Scheme::make(7, 3, 3, 3);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    o.expect(simulate_hits(cyc, s, 5'000, seed, {1}) == simulate_hits(cyc, s, 5'000, seed, {4}), "simulate_hits");
    o.expect(simulate_random_designs(s, 5, 5'000, seed, {1}) == simulate_random_designs(s, 5, 5'000, seed, {4}),
             "simulate_random_designs");
    const auto req = Requirement::lottery(3, 2);
    o.expect(local_search_reduce(cyc, req, 2'000, seed).same_sequence(local_search_reduce(cyc, req, 2'000, seed)),
             "local_search_reduce");
    Rng a(seed), b(seed);
    o.expect(random_draw(49, 6, a) == random_draw(49, 6, b), "random_draw");
    seeded += 4;
  }

  o.note(std::to_string(implications) + " implications, " + std::to_string(greedy) + " greedy designs, " +
         std::to_string(roundtrips) + " round-trips, " + std::to_string(seeded) + " seeded repeats");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"counting constants", counting_constants},
      {"hit counts", hit_counts},
      {"saturation bounds", saturation_bounds},
      {"greedy (7,3,2)", greedy_small},
      {"cyclic constructions", cyclic},
      {"verification fixtures", verification_fixtures},
      {"exhaustive minima", exhaustive_oracles},
      {"probability regressions", probability_regressions},
      {"no-hit identity", no_hit_identity},
      {"approximation band", approximation_band},
      {"greedy (15,6,5)", greedy_large},
      {"simulation", simulation},
      {"property suites", property_suites},
  };
  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::string line = std::string(o.pass ? "PASS" : "FAIL") + " " + (i < 9 ? " " : "") + std::to_string(i + 1) + "  " +
                       criteria[i].first;
    for (const auto& n : o.notes) line += " | " + n;
    if (!o.pass) {
      line += " | failed:";
      for (const auto& f : o.failures) line += " " + f + ";";
    }
    std::printf("%s\n", line.c_str());
    passed += o.pass ? 1 : 0;
  }
  std::printf("%d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
