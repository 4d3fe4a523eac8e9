#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lotto/combinatorics.hpp"
#include "lotto/constructor.hpp"
#include "lotto/design.hpp"
#include "lotto/errors.hpp"
#include "lotto/format.hpp"
#include "lotto/probability.hpp"
#include "lotto/reducer.hpp"
#include "lotto/simulator.hpp"
#include "lotto/verifier.hpp"

namespace lotto::cli {
namespace {

using nlohmann::json;

// Raised for problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, json_lines };

const std::map<std::string, Format> kFormats{{"table", Format::table}, {"json-lines", Format::json_lines}};

struct Common {
  Format format = Format::table;
};

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "table or json-lines")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

json block_json(const Block& b) {
  json arr = json::array();
  for (int e : b) arr.push_back(e);
  return arr;
}

ParsedDesign load(const std::string& path, int n, int k, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  auto parsed = parse_design(in, n, k);
  for (const auto& w : parsed.warnings) err << path << ": " << w << '\n';
  return parsed;
}

void save(const Design& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  write_design(out, d);
  if (!out) throw UsageError("cannot write " + path);
}

void emit(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

// Writes the design to `path`, or to `out` with the summary lines commented.
void deliver(std::ostream& out, const Design& d, const std::optional<std::string>& path,
             const std::vector<std::string>& summary, Format format) {
  if (path) {
    save(d, *path);
    if (format == Format::table) {
      for (const auto& s : summary) out << s << '\n';
    }
    return;
  }
  if (format == Format::table) {
    for (const auto& s : summary) out << "# " << s << '\n';
    write_design(out, d);
  }
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  Common common;
  int n = 0, k = 0;
  std::optional<int> t;
  std::string method = "greedy";
  std::optional<std::string> initial;
  std::optional<std::string> out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  if (a.k > a.n) throw UsageError("k must not exceed n");
  Scheme::make(a.n, a.k, a.k, a.t.value_or(0));
  Design d(a.n, a.k);
  if (a.method == "greedy") {
    if (!a.t) throw UsageError("greedy construction needs --t");
    d = greedy_cover(a.n, a.k, *a.t);
  } else {
    if (!a.initial) throw UsageError("cyclic construction needs --initial");
    Block init;
    try {
      init = parse_block_literal(*a.initial);
    } catch (const FormatError& e) {
      throw UsageError(std::string("--initial: ") + e.what());
    }
    if (!init.fits(a.n, a.k)) throw UsageError("--initial is not a " + std::to_string(a.k) + "-subset of 1.." +
                                               std::to_string(a.n));
    d = cyclic_design(a.n, a.k, init);
  }

  std::optional<VerifyReport> report;
  if (a.t) report = verify_covering(d, *a.t);
  std::string summary = format_count(d.size()) + " blocks";
  if (report) summary += std::string(", covering: ") + (report->valid ? "valid" : "invalid");

  deliver(out, d, a.out, {summary}, a.common.format);
  if (a.common.format == Format::json_lines) {
    json inputs{{"n", a.n}, {"k", a.k}, {"method", a.method}};
    if (a.t) inputs["t"] = *a.t;
    if (a.initial) inputs["initial"] = block_json(parse_block_literal(*a.initial));
    json outputs{{"blocks", d.size()}};
    if (report) outputs["covering_valid"] = report->valid;
    if (a.out) outputs["file"] = *a.out;
    else {
      json list = json::array();
      for (const auto& b : d) list.push_back(block_json(b));
      outputs["design"] = std::move(list);
    }
    emit(out, {{"command", "construct"}, {"inputs", inputs}, {"outputs", outputs}, {"method", a.method}});
  }
  if (report && !report->valid) return kNegative;
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct SchemeArgs {
  std::string mode = "cover";
  std::optional<int> t;
  std::optional<int> p;
};

void add_scheme(CLI::App* app, SchemeArgs& s) {
  app->add_option("--mode", s.mode, "cover or lottery")->check(CLI::IsMember({"cover", "lottery"}));
  app->add_option("--t", s.t, "hit threshold")->required();
  app->add_option("--p", s.p, "numbers drawn (lottery mode)");
}

Requirement requirement_of(const SchemeArgs& s, int n, int k) {
  if (s.mode == "lottery") {
    if (!s.p) throw UsageError("lottery mode needs --p");
    return Requirement::lottery(Scheme::make(n, k, *s.p, *s.t));
  }
  if (*s.t < 0 || *s.t > k) throw UsageError("--t must lie in [0, k]");
  return Requirement::covering(*s.t);
}

struct VerifyArgs {
  Common common;
  std::string file;
  int n = 0, k = 0;
  SchemeArgs scheme;
  std::string witnesses = "10";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  if (a.witnesses == "all") {
    opts.witness_cap = VerifyOptions::kAllWitnesses;
  } else {
    try {
      std::size_t used = 0;
      const long long w = std::stoll(a.witnesses, &used);
      if (used != a.witnesses.size() || w < 0) throw std::invalid_argument("");
      opts.witness_cap = static_cast<std::size_t>(w);
    } catch (const std::logic_error&) {
      throw UsageError("--witnesses takes a count or 'all'");
    }
  }
  const auto req = requirement_of(a.scheme, a.n, a.k);
  const auto parsed = load(a.file, a.n, a.k, err);
  const bool lottery = req.kind == Requirement::Kind::lottery;
  const auto report = lottery ? verify_lottery(parsed.design, Scheme::make(a.n, a.k, req.p, req.t), opts)
                              : verify_covering(parsed.design, req.t, opts);

  const std::string what = lottery ? "p-subsets" : "t-subsets";
  const std::string lack = lottery ? "unserved" : "missing";
  if (a.common.format == Format::table) {
    out << (report.valid ? "valid" : "invalid") << ", " << format_count(report.checked) << ' ' << what
        << " checked, " << format_count(report.deficient) << ' ' << lack << '\n';
    for (const auto& w : report.witnesses) out << lack << ": " << to_string(w) << '\n';
  } else {
    json inputs{{"file", a.file}, {"n", a.n}, {"k", a.k}, {"mode", a.scheme.mode}, {"t", req.t}};
    if (lottery) inputs["p"] = req.p;
    json wit = json::array();
    for (const auto& w : report.witnesses) wit.push_back(block_json(w));
    emit(out, {{"command", "verify"},
               {"inputs", inputs},
               {"outputs",
                {{"valid", report.valid},
                 {"blocks", parsed.design.size()},
                 {"checked", report.checked},
                 {"deficient", report.deficient},
                 {"witnesses", wit}}}});
  }
  return report.valid ? kOk : kNegative;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  Common common;
  int n = 0, p = 0, t = 0;
  std::optional<Count> v;
  std::vector<double> q;
  Method method = Method::exact;
  LevelMatch match = LevelMatch::nearest;
  int decimals = 3;
};

json probability_json(const Probability& pr) {
  json j{{"value", pr.value}, {"via", to_string(pr.via)}};
  if (pr.exact) j["exact"] = pr.exact->str();
  if (pr.regime_warning) j["regime_warning"] = true;
  return j;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  if (a.n < 1 || a.p < 1 || a.p > a.n) throw UsageError("need 1 <= p <= n");
  if (a.t < 0 || a.t > a.p) throw UsageError("need 0 <= t <= p");
  if (a.decimals < 0 || a.decimals > 17) throw UsageError("--decimals must lie in [0, 17]");
  const auto profile = HitProfile::of(a.n, a.p);
  const Count N = profile.total;
  const Count M = profile.at_least(a.t);
  for (double level : a.q) {
    if (!(level >= 0.0 && level <= 1.0)) throw UsageError("--q levels must lie in [0, 1]");
  }
  if (a.v && *a.v > N) throw UsageError("--v exceeds C(n, p) = " + format_count(N));

  const bool table = a.common.format == Format::table;
  json inputs{{"n", a.n}, {"p", a.p}, {"t", a.t}};
  if (table) {
    out << "C(" << a.n << ',' << a.p << ") = " << format_count(N) << '\n';
    out << "hit counts:";
    for (std::size_t s = 0; s < profile.hits.size(); ++s) out << ' ' << s << ':' << format_count(profile.hits[s]);
    out << '\n' << "qualifying (>= " << a.t << " hits) = " << format_count(M) << '\n';
  }

  if (a.v) {
    const auto safety = safety_at_least_one(N, M, *a.v, a.method);
    const auto jackpot = jackpot_prob(N, *a.v);
    if (table) {
      out << "blocks v = " << format_count(*a.v) << '\n';
      out << "safety (>= " << a.t << " hits): " << format_percent(safety.value, a.decimals) << " ["
          << to_string(safety.via) << ']';
      if (safety.regime_warning) out << " (warning: M is not small against N - v)";
      out << '\n';
      out << "jackpot: " << format_percent(jackpot.value, a.decimals) << '\n';
    } else {
      json in = inputs;
      in["v"] = *a.v;
      emit(out, {{"command", "analyze"},
                 {"inputs", in},
                 {"outputs",
                  {{"total", N},
                   {"qualifying", M},
                   {"safety", probability_json(safety)},
                   {"jackpot", probability_json(jackpot)}}},
                 {"method", to_string(a.method)}});
    }
  }

  if (!a.q.empty()) {
    std::vector<double> levels = a.q;
    std::sort(levels.begin(), levels.end());
    if (M == 0) throw UsageError("no ticket can score " + std::to_string(a.t) + " hits");
    const auto st = safety_table(N, M, levels, a.method, a.match);
    if (table) {
      out << "level      blocks     safety\n";
      for (const auto& row : st.rows) {
        char line[128];
        char level[32];
        std::snprintf(level, sizeof level, "%g%%", row.level * 100.0);
        std::snprintf(line, sizeof line, "%-10s %-10s %s%s", level,
                      format_count(row.blocks).c_str(), format_percent(row.safety.value, a.decimals).c_str(),
                      row.method_sensitive() ? "  *" : "");
        out << line << '\n';
      }
      if (std::any_of(st.rows.begin(), st.rows.end(), [](const SafetyRow& r) { return r.method_sensitive(); })) {
        out << "* the other method gives a different block count\n";
      }
      out << "method: " << to_string(a.method) << ", match: " << to_string(a.match) << '\n';
    } else {
      for (const auto& row : st.rows) {
        json in = inputs;
        in["q"] = row.level;
        in["match"] = to_string(a.match);
        emit(out, {{"command", "analyze"},
                   {"inputs", in},
                   {"outputs",
                    {{"total", N},
                     {"qualifying", M},
                     {"blocks", row.blocks},
                     {"safety", probability_json(row.safety)},
                     {"other_method_blocks", row.other_method_blocks}}},
                   {"method", to_string(a.method)}});
      }
    }
  }

  if (!a.v && a.q.empty() && !table) {
    json hits = json::array();
    for (auto h : profile.hits) hits.push_back(h);
    emit(out, {{"command", "analyze"}, {"inputs", inputs}, {"outputs", {{"total", N}, {"qualifying", M}, {"hits", hits}}}});
  }
  return kOk;
}

// --- reduce -----------------------------------------------------------------

struct ReduceArgs {
  Common common;
  std::string file;
  int n = 0, k = 0;
  SchemeArgs scheme;
  std::uint64_t steps = 10'000;
  std::uint64_t seed = 1;
  std::optional<std::size_t> exhaustive;
  Count budget = ExhaustiveOptions{}.budget;
  AnnealOptions anneal;
  std::optional<std::string> out;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const auto req = requirement_of(a.scheme, a.n, a.k);
  const auto parsed = load(a.file, a.n, a.k, err);
  const Design& start = parsed.design;
  if (!satisfies(start, req)) {
    err << "input design does not meet the requirement\n";
    if (a.common.format == Format::json_lines) {
      emit(out, {{"command", "reduce"}, {"inputs", {{"file", a.file}}}, {"outputs", {{"valid_input", false}}}});
    }
    return kNegative;
  }
  if (!(a.anneal.initial_temperature > 0.0) || !(a.anneal.decay > 0.0 && a.anneal.decay <= 1.0)) {
    throw UsageError("need temperature > 0 and 0 < decay <= 1");
  }

  std::optional<Design> result;
  std::string method;
  Count nodes = 0;
  if (a.exhaustive) {
    method = "exhaustive";
    ExhaustiveOptions opts;
    opts.budget = a.budget;
    opts.nodes_visited = &nodes;
    result = exhaustive_min(a.n, a.k, req, *a.exhaustive, opts);
  } else {
    method = "local-search";
    result = local_search_reduce(start, req, a.steps, a.seed, a.anneal);
  }

  json inputs{{"file", a.file}, {"n", a.n}, {"k", a.k}, {"mode", a.scheme.mode}, {"t", req.t}};
  if (req.kind == Requirement::Kind::lottery) inputs["p"] = req.p;
  if (a.exhaustive) inputs["max_size"] = *a.exhaustive;
  else inputs["steps"] = a.steps;

  if (!result) {
    if (a.common.format == Format::table) {
      out << "before: " << format_count(start.size()) << " blocks\n";
      out << "no design with at most " << *a.exhaustive << " blocks (" << format_count(nodes)
          << " nodes searched)\n";
    } else {
      emit(out, {{"command", "reduce"},
                 {"inputs", inputs},
                 {"outputs", {{"before", start.size()}, {"found", false}, {"nodes", nodes}}},
                 {"method", method}});
    }
    return kNegative;
  }

  std::vector<std::string> summary{"before: " + format_count(start.size()) + " blocks",
                                   "after: " + format_count(result->size()) + " blocks"};
  if (a.exhaustive) summary.push_back("nodes searched: " + format_count(nodes));
  else summary.push_back("seed: " + std::to_string(a.seed));
  deliver(out, *result, a.out, summary, a.common.format);
  if (a.common.format == Format::json_lines) {
    json outputs{{"before", start.size()}, {"after", result->size()}, {"found", true}};
    if (a.exhaustive) outputs["nodes"] = nodes;
    if (a.out) outputs["file"] = *a.out;
    else {
      json list = json::array();
      for (const auto& b : *result) list.push_back(block_json(b));
      outputs["design"] = std::move(list);
    }
    json record{{"command", "reduce"}, {"inputs", inputs}, {"outputs", outputs}, {"method", method}};
    if (!a.exhaustive) record["seed"] = a.seed;
    emit(out, record);
  }
  return kOk;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  Common common;
  std::string file;
  int n = 0, k = 0, p = 0, t = 0;
  Count trials = 100'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const auto scheme = Scheme::make(a.n, a.k, a.p, a.t);
  const auto parsed = load(a.file, a.n, a.k, err);
  const auto report = simulate_hits(parsed.design, scheme, a.trials, a.seed, SimOptions{a.threads});

  if (a.common.format == Format::table) {
    out << "trials: " << format_count(report.trials) << '\n';
    out << "seed: " << report.seed << '\n';
    out << "blocks: " << format_count(parsed.design.size()) << '\n';
    out << "best hit per draw:\n";
    for (std::size_t h = 0; h < report.best_hit.size(); ++h) {
      out << "  " << h << ": " << format_count(report.best_hit[h]) << '\n';
    }
    out << "at_least_" << a.t << " = " << format_fixed(report.at_least_frequency(), 6) << '\n';
  } else {
    json hist = json::array();
    for (auto c : report.best_hit) hist.push_back(c);
    emit(out, {{"command", "simulate"},
               {"inputs", {{"file", a.file}, {"n", a.n}, {"k", a.k}, {"p", a.p}, {"t", a.t}, {"trials", a.trials}}},
               {"outputs",
                {{"best_hit", hist},
                 {"at_least", report.at_least},
                 {"at_least_frequency", report.at_least_frequency()}}},
               {"seed", a.seed}});
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lottery and covering design toolkit"};
  app.require_subcommand(1);
  app.name(args.empty() ? "lotto" : args.front());

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a design");
  construct->add_option("--n", ca.n, "ground set size")->required();
  construct->add_option("--k", ca.k, "block size")->required();
  construct->add_option("--t", ca.t, "covering strength");
  construct->add_option("--method", ca.method, "greedy or cyclic")->check(CLI::IsMember({"greedy", "cyclic"}));
  construct->add_option("--initial", ca.initial, "initial block for cyclic, e.g. 1,2,6");
  construct->add_option("--out", ca.out, "output design file (default: stdout)");
  add_format(construct, ca.common);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a design file");
  verify->add_option("--file", va.file, "design file")->required();
  verify->add_option("--n", va.n)->required();
  verify->add_option("--k", va.k)->required();
  add_scheme(verify, va.scheme);
  verify->add_option("--witnesses", va.witnesses, "witnesses to print: a count or 'all'");
  add_format(verify, va.common);

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "hit probabilities for random tickets");
  analyze->add_option("--n", aa.n)->required();
  analyze->add_option("--p", aa.p, "numbers drawn (= ticket size)")->required();
  analyze->add_option("--t", aa.t, "hit threshold")->required();
  analyze->add_option("--v", aa.v, "number of distinct tickets");
  analyze->add_option("--q", aa.q, "target safety levels, e.g. 0.99,0.999")->delimiter(',');
  analyze
      ->add_option("--method", aa.method, "exact or approx")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Method>{{"exact", Method::exact}, {"approx", Method::approx}},
                                          CLI::ignore_case));
  analyze
      ->add_option("--match", aa.match, "nearest or threshold")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, LevelMatch>{{"nearest", LevelMatch::nearest}, {"threshold", LevelMatch::threshold}},
          CLI::ignore_case));
  analyze->add_option("--decimals", aa.decimals, "digits after the decimal point in percentages");
  add_format(analyze, aa.common);

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "shrink a design");
  reduce->add_option("--file", ra.file, "design file")->required();
  reduce->add_option("--n", ra.n)->required();
  reduce->add_option("--k", ra.k)->required();
  add_scheme(reduce, ra.scheme);
  reduce->add_option("--steps", ra.steps, "local search steps");
  reduce->add_option("--seed", ra.seed, "random seed");
  reduce->add_option("--temperature", ra.anneal.initial_temperature, "initial annealing temperature");
  reduce->add_option("--decay", ra.anneal.decay, "temperature factor per step");
  reduce->add_option("--exhaustive", ra.exhaustive, "exact search up to this many blocks");
  reduce->add_option("--budget", ra.budget, "node budget for --exhaustive");
  reduce->add_option("--out", ra.out, "output design file (default: stdout)");
  add_format(reduce, ra.common);

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "play a design against random draws");
  simulate->add_option("--file", sa.file, "design file")->required();
  simulate->add_option("--n", sa.n)->required();
  simulate->add_option("--k", sa.k)->required();
  simulate->add_option("--p", sa.p)->required();
  simulate->add_option("--t", sa.t)->required();
  simulate->add_option("--trials", sa.trials);
  simulate->add_option("--seed", sa.seed);
  simulate->add_option("--threads", sa.threads, "worker threads, 0 = all cores");
  add_format(simulate, sa.common);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("lotto");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(ca, out);
    if (*verify) return cmd_verify(va, out, err);
    if (*analyze) return cmd_analyze(aa, out);
    if (*reduce) return cmd_reduce(ra, out, err);
    if (*simulate) return cmd_simulate(sa, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidDesign& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    // Domain and overflow errors here come from argument values.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lotto::cli
