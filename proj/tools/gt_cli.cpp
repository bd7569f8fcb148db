// gt: command-line surface over the group-testing workbench.
//
// Exit codes: 0 = ok / property holds, 1 = property or verdict false,
// 2 = usage error, 3 = internal failure (constructor gave up, no NO pool,
// budget exceeded).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gt/adaptive.hpp"
#include "gt/family_ops.hpp"
#include "gt/generators.hpp"
#include "gt/hypergraph.hpp"
#include "gt/json_io.hpp"
#include "gt/models.hpp"
#include "gt/separation.hpp"
#include "gt/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void emit(const std::string& payload, const std::string& human) {
  std::cout << payload << std::endl;
  if (!human.empty()) std::cerr << human << std::endl;
}

gt::Bitset parse_elements(int n, const std::string& csv) {
  gt::Bitset b(n);
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    int v = std::stoi(csv.substr(pos, comma - pos));
    if (v < 1 || v > n) throw gt::BadParameter("element out of range: " + std::to_string(v));
    b.set(v);
    pos = comma + 1;
  }
  return b;
}

struct CheckArgs {
  std::string family_file;
  std::string property;
  int d = 0;
  int r = 0;
  int i = 0;
  int j = 0;
};

int run_check(const CheckArgs& args) {
  gt::SetFamily f = gt::load_family(args.family_file);
  auto need_d = [&] {
    if (args.d < 1) throw gt::BadParameter("this property needs --d");
    return args.d;
  };
  const std::string& p = args.property;
  if (p == "sperner" || p == "cancellative" || p == "int-cancellative" || p == "int-closed" ||
      p == "d-separating" || p == "d-union-free" || p == "d-cover-free" || p == "rd-cover-free") {
    gt::PropertyReport report;
    if (p == "sperner") report = gt::is_sperner(f);
    else if (p == "cancellative") report = gt::is_cancellative(f);
    else if (p == "int-cancellative") report = gt::is_intersection_cancellative(f);
    else if (p == "int-closed") report = gt::is_intersection_closed(f);
    else if (p == "d-separating") report = gt::is_d_separating(f, need_d());
    else if (p == "d-union-free") report = gt::is_d_union_free(f, need_d());
    else if (p == "d-cover-free") report = gt::is_d_cover_free(f, need_d());
    else {
      if (args.r < 1) throw gt::BadParameter("rd-cover-free needs --r");
      report = gt::is_r_d_cover_free(f, args.r, need_d());
    }
    emit(gt::report_to_json(report), p + ": " + (report.holds ? "holds" : "fails"));
    return report.holds ? kExitOk : kExitFalse;
  }
  gt::ModelVerdict verdict;
  if (p == "model1") verdict = gt::solves_model1_semantic(f, need_d());
  else if (p == "model2") verdict = gt::solves_model2_semantic(f, need_d());
  else if (p == "model2prime") verdict = gt::solves_model2prime_semantic(f, need_d());
  else if (p == "model2dbl") verdict = gt::solves_model2dbl_semantic(f, need_d());
  else if (p == "model3") verdict = gt::solves_model3_semantic(f, need_d());
  else if (p == "model4") {
    if (args.i < 1 || args.j < 1) throw gt::BadParameter("model4 needs --i and --j");
    verdict = gt::solves_model4_semantic(f, need_d(), args.i, args.j);
  } else {
    throw gt::BadParameter("unknown property: " + p);
  }
  emit(gt::verdict_to_json(verdict), p + ": " + (verdict.solves ? "solves" : "does not solve"));
  return verdict.solves ? kExitOk : kExitFalse;
}

struct ConstructArgs {
  std::string kind;
  int n = 0, r = 0, d = 0, g = 5;
  std::uint64_t seed = 1;
  int max_restarts = 400;
  std::string out;
};

int run_construct(const ConstructArgs& args) {
  gt::SetFamily family(1);
  std::string summary;
  if (args.kind == "binary-separating") {
    family = gt::binary_separating_family(args.n);
    summary = "binary separating family, " + std::to_string(family.size()) + " sets";
  } else if (args.kind == "girth-hypergraph") {
    auto res = gt::construct_girth_hypergraph(args.n, args.r, args.d, args.g, args.seed,
                                              args.max_restarts);
    if (!res.hypergraph) {
      emit("{\"error\":\"restarts_exhausted\",\"restarts\":" + std::to_string(res.restarts_used) +
               "}",
           "construction failed after " + std::to_string(res.restarts_used) + " restarts");
      return kExitInternal;
    }
    family = *res.hypergraph;
    auto valid = gt::validate_hypergraph(family, args.r, args.d, args.g);
    summary = "girth hypergraph with " + std::to_string(family.size()) + " edges, validation " +
              (valid.holds ? "ok" : "FAILED");
  } else if (args.kind == "model3") {
    auto res = gt::model3_construction(args.n, args.d, args.seed, args.max_restarts);
    if (!res.family) {
      emit("{\"error\":\"restarts_exhausted\",\"restarts\":" + std::to_string(res.restarts_used) +
               "}",
           "construction failed after " + std::to_string(res.restarts_used) + " restarts");
      return kExitInternal;
    }
    family = *res.family;
    summary = "model3 query family with " + std::to_string(family.size()) + " sets";
  } else {
    throw gt::BadParameter("unknown construction kind: " + args.kind);
  }
  if (!args.out.empty()) gt::save_family(args.out, family);
  emit(gt::family_to_json(family), summary);
  return kExitOk;
}

struct SimulateArgs {
  std::string strategy;
  int n = 0, d = 0;
  std::string oracle;
  int random_count = 0;
  std::uint64_t seed = 0;
  std::string out;
};

std::unique_ptr<gt::Strategy> make_strategy(const std::string& name, int n, int d) {
  using FA = gt::FindThenAnnounceStrategy;
  if (name == "halving-model3") return std::make_unique<gt::HalvingModel3Strategy>(n, d);
  if (name == "find-announce-model1") return std::make_unique<FA>(FA::Announce::model1, n, d);
  if (name == "find-announce-model2prime")
    return std::make_unique<FA>(FA::Announce::model2prime, n, d);
  if (name == "find-announce-model2dbl") return std::make_unique<FA>(FA::Announce::model2dbl, n, d);
  if (name == "singletons") return std::make_unique<gt::SingletonStrategy>(n, d);
  throw gt::BadParameter("unknown strategy: " + name);
}

std::optional<gt::ModelTag> strategy_model(const std::string& name) {
  if (name == "halving-model3") return gt::ModelTag::model3;
  if (name == "find-announce-model1") return gt::ModelTag::model1;
  if (name == "find-announce-model2prime") return gt::ModelTag::model2prime;
  if (name == "find-announce-model2dbl") return gt::ModelTag::model2dbl;
  return std::nullopt;
}

int run_simulate(const SimulateArgs& args) {
  std::vector<gt::Bitset> oracles;
  if (!args.oracle.empty()) {
    gt::Bitset d_set = parse_elements(args.n, args.oracle);
    if (d_set.count() != args.d) throw gt::BadParameter("--oracle must list exactly d elements");
    oracles.push_back(std::move(d_set));
  } else {
    int count = args.random_count > 0 ? args.random_count : 1;
    gt::Rng rng(args.seed);
    for (int t = 0; t < count; ++t) {
      std::vector<int> pool(args.n);
      for (int i = 0; i < args.n; ++i) pool[i] = i + 1;
      rng.shuffle(pool);
      gt::Bitset d_set(args.n);
      for (int i = 0; i < args.d; ++i) d_set.set(pool[i]);
      oracles.push_back(std::move(d_set));
    }
  }
  auto model = strategy_model(args.strategy);
  std::string rows;
  int max_queries = 0;
  bool all_verified = true;
  std::vector<gt::Transcript> transcripts;
  for (const auto& oracle : oracles) {
    auto strategy = make_strategy(args.strategy, args.n, args.d);
    gt::Transcript t = gt::run_session(*strategy, oracle, args.n, args.d);
    max_queries = std::max(max_queries, (int)t.steps.size());
    bool verified = true;
    if (model) verified = gt::verify_transcript(t, *model).solves;
    all_verified = all_verified && verified;
    if (!rows.empty()) rows += ',';
    rows += "{\"queries\":" + std::to_string(t.steps.size()) +
            ",\"verdict_matches_oracle\":" + (*t.verdict == oracle ? "true" : "false") +
            ",\"verified\":" + (verified ? "true" : "false") + "}";
    transcripts.push_back(std::move(t));
  }
  if (!args.out.empty()) {
    if (transcripts.size() == 1) {
      gt::save_transcript(args.out, transcripts[0]);
    } else {
      std::string all = "[";
      for (std::size_t i = 0; i < transcripts.size(); ++i) {
        if (i) all += ',';
        all += gt::transcript_to_json(transcripts[i]);
      }
      all += "]";
      std::ofstream f(args.out, std::ios::binary);
      if (!f) throw gt::JsonError("cannot write " + args.out);
      f << all << '\n';
    }
  }
  emit("{\"sessions\":" + std::to_string(oracles.size()) +
           ",\"max_queries\":" + std::to_string(max_queries) +
           ",\"all_verified\":" + (all_verified ? "true" : "false") + ",\"runs\":[" + rows + "]}",
       args.strategy + ": " + std::to_string(oracles.size()) + " session(s), max " +
           std::to_string(max_queries) + " queries");
  return all_verified ? kExitOk : kExitFalse;
}

struct SweepArgs {
  std::string theorem;
  gt::SweepSpec spec;
  std::string mode = "exhaustive";
  std::uint64_t count = 0;
};

int run_sweep_cmd(const SweepArgs& args) {
  auto theorem = gt::sweep_by_name(args.theorem);
  if (!theorem) throw gt::BadParameter("unknown sweep theorem: " + args.theorem);
  gt::SweepSpec spec = args.spec;
  if (args.mode == "random") {
    spec.random_mode = true;
    spec.random_count = args.count > 0 ? args.count : 1000;
  } else if (args.mode != "exhaustive") {
    throw gt::BadParameter("mode must be exhaustive or random");
  }
  gt::SweepResult result = gt::run_sweep(*theorem, spec);
  emit(gt::sweep_result_to_json(result),
       args.theorem + ": " + std::to_string(result.cases) + " cases, " +
           std::to_string(result.mismatches) + " mismatches");
  return result.mismatches == 0 ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-testing workbench"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "evaluate a family property or model");
  check->add_option("family", check_args.family_file, "family JSON file")->required();
  check
      ->add_option("property", check_args.property,
                   "sperner|cancellative|int-cancellative|int-closed|d-separating|"
                   "d-union-free|d-cover-free|rd-cover-free|model1|model2|model2prime|"
                   "model2dbl|model3|model4")
      ->required();
  check->add_option("--d", check_args.d, "number of defectives");
  check->add_option("--r", check_args.r, "intersection arity for rd-cover-free");
  check->add_option("--i", check_args.i, "model4 hidden-coalition size");
  check->add_option("--j", check_args.j, "model4 knowing-coalition size");

  ConstructArgs con_args;
  auto* con = app.add_subcommand("construct", "build a family");
  con->add_option("kind", con_args.kind, "binary-separating|girth-hypergraph|model3")->required();
  con->add_option("--n", con_args.n, "universe size")->required();
  con->add_option("--r", con_args.r, "edge size");
  con->add_option("--d", con_args.d, "regularity / defectives");
  con->add_option("--g", con_args.g, "girth target");
  con->add_option("--seed", con_args.seed, "construction seed");
  con->add_option("--max-restarts", con_args.max_restarts, "restart budget");
  con->add_option("--out", con_args.out, "write the family JSON here");

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "run adaptive sessions");
  sim->add_option("strategy", sim_args.strategy,
                  "halving-model3|find-announce-model1|find-announce-model2prime|"
                  "find-announce-model2dbl|singletons")
      ->required();
  sim->add_option("--n", sim_args.n, "universe size")->required();
  sim->add_option("--d", sim_args.d, "number of defectives")->required();
  sim->add_option("--oracle", sim_args.oracle, "comma-separated defective elements");
  sim->add_option("--random", sim_args.random_count, "number of random oracles");
  sim->add_option("--seed", sim_args.seed, "random oracle seed");
  sim->add_option("--out", sim_args.out, "write transcript JSON here");

  SweepArgs sweep_args;
  auto* swp = app.add_subcommand("sweep", "replay a theorem over a family population");
  swp->add_option("theorem", sweep_args.theorem,
                  "model1d|model2dbl|model2prime-sandwich|intcan|dsepdual|claim-canc|"
                  "model2-impossible|model4-impossible")
      ->required();
  swp->add_option("--n", sweep_args.spec.n, "universe size");
  swp->add_option("--max-sets", sweep_args.spec.max_sets, "largest family size");
  swp->add_option("--d", sweep_args.spec.d, "number of defectives");
  swp->add_option("--mode", sweep_args.mode, "exhaustive|random");
  swp->add_option("--count", sweep_args.count, "random mode population size");
  swp->add_option("--seed", sweep_args.spec.seed, "random mode seed");
  swp->add_option("--jobs", sweep_args.spec.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (con->parsed()) return run_construct(con_args);
    if (sim->parsed()) return run_simulate(sim_args);
    if (swp->parsed()) return run_sweep_cmd(sweep_args);
    return kExitUsage;
  } catch (const gt::BadParameter& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const gt::BadScenario& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const gt::JsonError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const gt::EmptyMemberSet& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const gt::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << std::endl;
    return kExitInternal;
  } catch (const gt::InsufficientNoPool& e) {
    std::cerr << "strategy: " << e.what() << std::endl;
    return kExitInternal;
  } catch (const gt::StrategyError& e) {
    std::cerr << "strategy: " << e.what() << std::endl;
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return kExitInternal;
  }
}
