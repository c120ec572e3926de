// fairnet: check, solve, reduce, and benchmark fair-division instances on
// agent graphs. See README.md for file formats and exit codes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairnet/criteria.hpp"
#include "fairnet/generator.hpp"
#include "fairnet/oracles.hpp"
#include "fairnet/qp_flow.hpp"
#include "fairnet/reductions.hpp"
#include "fairnet/solvers.hpp"

using json = nlohmann::json;
using namespace fairnet;

namespace {

constexpr int kExitUnsatisfied = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct ExitWith {
  int code;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read '" << path << "'\n";
    throw ExitWith{kExitNoInput};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write '" << path << "'\n";
    throw ExitWith{kExitNoInput};
  }
  out << text;
}

json allocation_json(const Allocation& alloc) {
  json bundles = json::object();
  for (int i = 0; i < alloc.agent_count(); ++i) {
    if (alloc.bundle(i).none()) continue;
    bundles[std::to_string(i)] = alloc.bundle(i).to_vector();
  }
  return bundles;
}

json violations_json(const CriterionReport& report) {
  json arr = json::array();
  for (const Violation& v : report.violations) {
    json item;
    if (v.agent >= 0) item["agent"] = v.agent;
    if (v.neighbor >= 0) item["neighbor"] = v.neighbor;
    if (v.good >= 0) item["good"] = v.good;
    if (v.deficit > 0) item["deficit"] = v.deficit;
    arr.push_back(item);
  }
  return arr;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string instance_path, allocation_path, criterion, pareto_mode = "char";
  bool as_json = false;
};

int run_check(const CheckArgs& a) {
  Instance inst = parse_instance(slurp(a.instance_path));
  Allocation alloc = parse_allocation(slurp(a.allocation_path), inst);
  auto crit = criterion_from_name(a.criterion);
  if (!crit) {
    std::cerr << "unknown criterion '" << a.criterion << "'\n";
    return kExitUsage;
  }
  CriterionReport report =
      *crit == Criterion::Pareto
          ? check_pareto_efficient(inst, alloc,
                                   a.pareto_mode == "exhaustive"
                                       ? ParetoMode::Exhaustive
                                       : ParetoMode::Characterization)
          : run_check(*crit, inst, alloc);

  if (a.as_json) {
    json out{{"criterion", a.criterion},
             {"satisfied", report.satisfied},
             {"violations", violations_json(report)}};
    if (report.dominator) out["dominator"] = allocation_json(*report.dominator);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << a.criterion << ": "
              << (report.satisfied ? "satisfied" : "violated") << "\n";
    for (const Violation& v : report.violations) {
      std::cout << "  agent " << v.agent;
      if (v.neighbor >= 0) std::cout << " envies neighbor " << v.neighbor;
      if (v.good >= 0 && v.agent >= 0)
        std::cout << " holds wasted good " << v.good;
      if (v.good >= 0 && v.agent < 0) std::cout << " good " << v.good
                                                << " unassigned";
      if (v.deficit > 0) std::cout << " (deficit " << v.deficit << ")";
      std::cout << "\n";
    }
  }
  return report.satisfied ? 0 : kExitUnsatisfied;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string instance_path, fairness = "gef";
  std::string emit_allocation, dump_network;
  std::uint64_t budget = 10'000'000;
  bool as_json = false;
};

int run_solve(const SolveArgs& a) {
  Instance inst = parse_instance(slurp(a.instance_path));

  if (!a.dump_network.empty() && a.fairness == "qp")
    spill(a.dump_network, render_flow_network(build_qp_network(inst).net));

  SolveStatus status;
  std::optional<Allocation> allocation;
  std::uint64_t nodes = 0;
  long long elapsed_us = 0;
  std::vector<int> unvalued;

  if (a.fairness == "qp") {
    auto t0 = std::chrono::steady_clock::now();
    QpSolveResult r = solve_qp_pareto(inst);
    elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    status = r.feasible ? SolveStatus::Feasible : SolveStatus::Infeasible;
    allocation = std::move(r.allocation);
    unvalued = std::move(r.unvalued_goods);
  } else if (a.fairness == "gef" || a.fairness == "lp") {
    SolveOptions opts;
    opts.node_budget = a.budget;
    SolveResult r = a.fairness == "gef" ? solve_eef_gef(inst, opts)
                                        : solve_eef_lp(inst, opts);
    status = r.status;
    allocation = std::move(r.allocation);
    nodes = r.nodes_explored;
    elapsed_us = r.elapsed.count();
    unvalued = std::move(r.unvalued_goods);
  } else {
    std::cerr << "unknown fairness '" << a.fairness << "'\n";
    return kExitUsage;
  }

  if (allocation && !a.emit_allocation.empty())
    spill(a.emit_allocation, render_allocation(*allocation));

  if (a.as_json) {
    json out{{"fairness", a.fairness},
             {"status", solve_status_name(status)},
             {"nodes", nodes},
             {"elapsed_us", elapsed_us},
             {"unvalued_goods", unvalued}};
    out["allocation"] = allocation ? allocation_json(*allocation) : json();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << solve_status_name(status) << " (nodes " << nodes << ", "
              << elapsed_us / 1000.0 << " ms)\n";
    if (allocation) std::cout << render_allocation(*allocation);
  }
  switch (status) {
    case SolveStatus::Feasible: return 0;
    case SolveStatus::Infeasible: return kExitUnsatisfied;
    case SolveStatus::BudgetExhausted: return kExitBudget;
  }
  return kExitInternal;
}

// ---- reduce ---------------------------------------------------------------

struct ReduceArgs {
  std::string from, source_path, out_path, roles_path;
  bool stitch = false;
  bool as_json = false;
};

ReductionArtifact build_artifact(const std::string& from,
                                 const std::string& text, bool stitch) {
  if (from == "cutting") return reduce_cutting_to_two_types(parse_cutting(text));
  if (from == "clique-goods") return reduce_clique_goods(parse_clique(text));
  if (from == "clique-vc") return reduce_clique_vertexcover(parse_clique(text));
  if (from == "lsat") return reduce_lsat_paths(parse_lsat(text), stitch);
  if (from == "3col") return reduce_3col_lpa(parse_coloring(text));
  std::cerr << "unknown reduction '" << from << "'\n";
  throw ExitWith{kExitUsage};
}

int run_reduce(const ReduceArgs& a) {
  ReductionArtifact art = build_artifact(a.from, slurp(a.source_path), a.stitch);
  spill(a.out_path, render_instance(art.instance));
  if (!a.roles_path.empty()) spill(a.roles_path, render_roles(art));
  if (a.as_json) {
    json out{{"from", a.from},
             {"agents", art.instance.agent_count()},
             {"goods", art.instance.good_count()},
             {"edges", art.instance.edges().size()},
             {"trivial_no", art.trivial_no}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "reduced: " << art.instance.agent_count() << " agents, "
              << art.instance.good_count() << " goods"
              << (art.trivial_no ? " (trivial no-instance)" : "") << "\n";
  }
  return 0;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string problem, source_path;
  bool as_json = false;
};

int run_oracle(const OracleArgs& a) {
  const std::string text = slurp(a.source_path);
  bool found = false;
  json cert;
  std::ostringstream human;

  if (a.problem == "clique") {
    auto c = oracle_clique(parse_clique(text));
    found = c.has_value();
    if (c) {
      cert = json{{"vertices", c->vertices}};
      human << "clique:";
      for (int v : c->vertices) human << ' ' << v;
    }
  } else if (a.problem == "3col") {
    auto c = oracle_3coloring(parse_coloring(text));
    found = c.has_value();
    if (c) {
      cert = json{{"colors", c->colors}};
      human << "colors:";
      for (int v : c->colors) human << ' ' << v;
    }
  } else if (a.problem == "lsat") {
    auto c = oracle_lsat(parse_lsat(text));
    found = c.has_value();
    if (c) {
      std::vector<int> bits(c->begin(), c->end());
      cert = json{{"assignment", bits}};
      human << "assignment:";
      for (int b : bits) human << ' ' << b;
    }
  } else if (a.problem == "cutting") {
    auto c = oracle_cutting(parse_cutting(text));
    found = c.has_value();
    if (c) {
      cert = json{{"part", c->part}, {"separator", c->separator}};
      human << "part:";
      for (int v : c->part) human << ' ' << v;
      human << " separator:";
      for (int v : c->separator) human << ' ' << v;
    }
  } else {
    std::cerr << "unknown problem '" << a.problem << "'\n";
    return kExitUsage;
  }

  if (a.as_json) {
    json out{{"problem", a.problem}, {"found", found}};
    if (found) out["certificate"] = cert;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (found ? human.str() : std::string("none")) << "\n";
  }
  return found ? 0 : kExitUnsatisfied;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  GenOptions opts;
  std::string out_dir;
  bool as_json = false;
};

int run_gen(const GenArgs& a) {
  namespace fs = std::filesystem;
  fs::create_directories(a.out_dir);
  auto corpus = generate_corpus(a.opts);
  json files = json::array();
  for (const auto& [name, inst] : corpus) {
    std::ostringstream text;
    text << "# family " << a.opts.family << " seed " << a.opts.seed << " entry "
         << name << "\n";
    text << render_instance(inst);
    std::string path = (fs::path(a.out_dir) / (name + ".inst")).string();
    spill(path, text.str());
    files.push_back(path);
  }
  if (a.as_json)
    std::cout << json{{"files", files}}.dump(2) << "\n";
  else
    std::cout << "wrote " << files.size() << " instance(s) to " << a.out_dir
              << "\n";
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string corpus_dir, out_csv, solvers = "gef,lp,qp";
  std::uint64_t budget = 10'000'000;
  bool as_json = false;
};

int run_bench(const BenchArgs& a) {
  namespace fs = std::filesystem;
  std::vector<std::string> picks;
  {
    std::stringstream ss(a.solvers);
    std::string item;
    while (std::getline(ss, item, ',')) picks.push_back(item);
  }
  for (const std::string& s : picks)
    if (s != "gef" && s != "lp" && s != "qp") {
      std::cerr << "unknown solver '" << s << "'\n";
      return kExitUsage;
    }

  std::vector<fs::path> entries;
  if (fs::is_directory(a.corpus_dir))
    for (const auto& e : fs::directory_iterator(a.corpus_dir))
      if (e.path().extension() == ".inst") entries.push_back(e.path());
  std::sort(entries.begin(), entries.end());

  std::ostringstream csv;
  csv << "instance,solver,verdict,nodes,elapsed_us,agents,goods,edges\n";
  int skipped = 0;
  for (const fs::path& p : entries) {
    Instance inst = [&]() -> Instance {
      try {
        return parse_instance(slurp(p.string()));
      } catch (const ParseError& e) {
        std::cerr << "skipping " << p << ": " << e.what() << "\n";
        ++skipped;
        return make_instance(0, 0, {}, {});
      }
    }();
    if (inst.agent_count() == 0 && inst.good_count() == 0) continue;
    for (const std::string& solver : picks) {
      std::string verdict;
      std::uint64_t nodes = 0;
      long long us = 0;
      if (solver == "qp") {
        auto t0 = std::chrono::steady_clock::now();
        QpSolveResult r = solve_qp_pareto(inst);
        us = std::chrono::duration_cast<std::chrono::microseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
        verdict = r.feasible ? "feasible" : "infeasible";
      } else {
        SolveOptions opts;
        opts.node_budget = a.budget;
        SolveResult r = solver == "gef" ? solve_eef_gef(inst, opts)
                                        : solve_eef_lp(inst, opts);
        verdict = solve_status_name(r.status);
        nodes = r.nodes_explored;
        us = r.elapsed.count();
      }
      csv << p.stem().string() << ',' << solver << ',' << verdict << ','
          << nodes << ',' << us << ',' << inst.agent_count() << ','
          << inst.good_count() << ',' << inst.edges().size() << "\n";
    }
  }
  spill(a.out_csv, csv.str());
  if (a.as_json)
    std::cout << json{{"instances", entries.size() - skipped},
                      {"skipped", skipped},
                      {"csv", a.out_csv}}
                     .dump(2)
              << "\n";
  else
    std::cout << "benchmarked " << (entries.size() - skipped)
              << " instance(s), skipped " << skipped << ", csv: " << a.out_csv
              << "\n";
  return skipped == 0 ? 0 : kExitUnsatisfied;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair division of indivisible goods on agent graphs"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "evaluate a fairness criterion");
  check->add_option("--instance", check_args.instance_path)->required();
  check->add_option("--allocation", check_args.allocation_path)->required();
  check
      ->add_option("--criterion", check_args.criterion,
                   "gef|gp|qp|lp|complete|nonwasteful|pareto")
      ->required();
  check->add_option("--pareto-mode", check_args.pareto_mode,
                    "char|exhaustive (pareto only)");
  check->add_flag("--json", check_args.as_json);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "decide fair allocation existence");
  solve->add_option("--instance", solve_args.instance_path)->required();
  solve->add_option("--fairness", solve_args.fairness, "gef|lp|qp");
  solve->add_option("--budget", solve_args.budget, "node budget")
      ->envname("FAIRNET_BUDGET");
  solve->add_option("--emit-allocation", solve_args.emit_allocation);
  solve->add_option("--dump-network", solve_args.dump_network,
                    "write the flow network (qp only)");
  solve->add_flag("--json", solve_args.as_json);

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "build a reduced instance");
  reduce
      ->add_option("--from", reduce_args.from,
                   "cutting|clique-goods|clique-vc|lsat|3col")
      ->required();
  reduce->add_option("--source", reduce_args.source_path)->required();
  reduce->add_option("--out", reduce_args.out_path)->required();
  reduce->add_option("--roles", reduce_args.roles_path, "role sidecar path");
  reduce->add_flag("--stitch", reduce_args.stitch,
                   "join lsat path components into one path");
  reduce->add_flag("--json", reduce_args.as_json);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "brute-force a source problem");
  oracle
      ->add_option("--problem", oracle_args.problem,
                   "clique|3col|lsat|cutting")
      ->required();
  oracle->add_option("--source", oracle_args.source_path)->required();
  oracle->add_flag("--json", oracle_args.as_json);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a seeded instance corpus");
  gen->add_option("--family", gen_args.opts.family,
                  "er|path|star|clique|reduced-3col");
  gen->add_option("--count", gen_args.opts.count);
  gen->add_option("--agents", gen_args.opts.agents);
  gen->add_option("--goods", gen_args.opts.goods);
  gen->add_option("--edge-density", gen_args.opts.edge_density);
  gen->add_option("--val-density", gen_args.opts.valuation_density);
  gen->add_option("--seed", gen_args.opts.seed);
  gen->add_option("--out", gen_args.out_dir)->required();
  gen->add_flag("--json", gen_args.as_json);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run solvers over a corpus");
  bench->add_option("--corpus", bench_args.corpus_dir)->required();
  bench->add_option("--out", bench_args.out_csv)->required();
  bench->add_option("--solvers", bench_args.solvers, "comma list of gef,lp,qp");
  bench->add_option("--budget", bench_args.budget)->envname("FAIRNET_BUDGET");
  bench->add_flag("--json", bench_args.as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(check_args);
    if (*solve) return run_solve(solve_args);
    if (*reduce) return run_reduce(reduce_args);
    if (*oracle) return run_oracle(oracle_args);
    if (*gen) return run_gen(gen_args);
    if (*bench) return run_bench(bench_args);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitData;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitData;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
