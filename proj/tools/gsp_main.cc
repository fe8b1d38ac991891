#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gsp/bench.h"
#include "gsp/error.h"
#include "gsp/format.h"
#include "gsp/generate.h"
#include "gsp/graph_io.h"
#include "gsp/mip.h"
#include "gsp/reach_graph.h"
#include "gsp/validate.h"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitTimeout = 4;

struct InstanceArgs {
  std::string graph;
  std::string start;
  std::string goal;
  double q_max = 0.0;
  int k_max = 1;
  double q0 = 0.0;
  std::string reach_cache;
};

void AddInstanceArgs(CLI::App* cmd, InstanceArgs& a, bool required) {
  cmd->add_option("--graph", a.graph, "graph JSON file")->required();
  cmd->add_option("--start", a.start, "start vertex id")->required(required);
  cmd->add_option("--goal", a.goal, "goal vertex id")->required(required);
  cmd->add_option("--qmax", a.q_max, "tank capacity")->required(required);
  cmd->add_option("--kmax", a.k_max, "maximum number of refuelling stops")->required(required);
  cmd->add_option("--q0", a.q0, "fuel in the tank at the start");
  cmd->add_option("--reach-cache", a.reach_cache, "JSON file caching the refuel graph");
}

gsp::VertexId Vertex(const gsp::FuelGraph& g, const std::string& id, const char* what) {
  auto v = g.FindVertex(id);
  if (!v) {
    throw gsp::GspError(gsp::ErrorCode::kInvalidInstance,
                        std::string(what) + " \"" + id + "\" is not a vertex of the graph");
  }
  return *v;
}

gsp::ReachGraph Reach(const InstanceArgs& a, const gsp::Instance& inst) {
  if (a.reach_cache.empty()) return gsp::ComputeReachableSets(inst.g(), inst.q_max);
  return gsp::ReachGraphWithCache(a.reach_cache, inst.g(), inst.q_max);
}

gsp::Instance MakeInstance(const InstanceArgs& a) {
  auto graph = std::make_shared<const gsp::FuelGraph>(gsp::ReadGraphFile(a.graph));
  gsp::Instance inst{graph, Vertex(*graph, a.start, "start"), Vertex(*graph, a.goal, "goal"),
                     a.q_max, a.k_max, a.q0};
  inst.Validate();
  return inst;
}

int StatusExit(gsp::SolveStatus s) {
  switch (s) {
    case gsp::SolveStatus::kSolved: return kExitSolved;
    case gsp::SolveStatus::kInfeasible: return kExitInfeasible;
    case gsp::SolveStatus::kTimeout: return kExitTimeout;
  }
  return kExitInvalid;
}

void PrintText(const gsp::Instance& inst, const gsp::SolveResult& r) {
  const gsp::FuelGraph& g = inst.g();
  std::cout << "status: " << gsp::SolveStatusName(r.status) << '\n';
  if (r.solution) {
    std::cout << "cost: " << gsp::FormatNumber(r.cost()) << "\nroute:";
    for (const gsp::Hop& h : r.solution->route) std::cout << ' ' << g.name(h.vertex);
    std::cout << "\nstops:";
    for (const gsp::Stop& s : r.solution->stops) {
      std::cout << ' ' << g.name(s.vertex) << '+' << gsp::FormatNumber(s.amount);
    }
    std::cout << '\n';
  }
  const gsp::SearchStats& s = r.stats;
  std::cout << "labels generated/expanded/pruned: " << s.labels_generated << '/'
            << s.labels_expanded << '/' << s.labels_pruned << '\n'
            << "dp states: " << s.dp_states_computed << '\n'
            << "heuristic ms: " << gsp::FormatNumber(s.heuristic_build_ms)
            << ", search ms: " << gsp::FormatNumber(s.search_ms) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gas station problem solver"};
  app.require_subcommand(1);

  int gen_n = 0;
  double gen_p = 0.3;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gsp::GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a connected G(n, p) graph");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output graph JSON")->required();
  gen->add_option("--price-lo", gen_opts.price_lo);
  gen->add_option("--price-hi", gen_opts.price_hi);
  gen->add_option("--fuel-lo", gen_opts.fuel_lo);
  gen->add_option("--fuel-hi", gen_opts.fuel_hi);

  InstanceArgs solve_args;
  std::string algo = "rfastar";
  bool unbounded = false;
  bool as_json = false;
  std::string solve_out;
  double time_limit = 0.0;
  auto* solve = app.add_subcommand("solve", "solve one instance");
  AddInstanceArgs(solve, solve_args, true);
  solve->add_option("--algo", algo)
      ->check(CLI::IsMember({"rfastar", "rfastar-noh", "rfastar-cached", "dp", "oracle"}));
  solve->add_flag("--unbounded", unbounded, "no stop limit (rfastar variants)");
  solve->add_flag("--json", as_json, "print the solution as JSON");
  solve->add_option("--out", solve_out, "also write the solution JSON here");
  solve->add_option("--time-limit", time_limit, "seconds; 0 means none");

  std::string spec_path;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "run a benchmark spec");
  bench->add_option("--spec", spec_path)->required();
  bench->add_option("--out", bench_out, "CSV output (overrides the spec)");

  InstanceArgs mip_args;
  std::string mip_out;
  bool no_smart = false;
  auto* mip = app.add_subcommand("export-mip", "write the MIP model as CPLEX LP");
  AddInstanceArgs(mip, mip_args, true);
  mip->add_option("--out", mip_out)->required();
  mip->add_flag("--no-smart-refuel", no_smart);

  InstanceArgs val_args;
  std::string sol_path;
  bool val_unbounded = false;
  auto* validate = app.add_subcommand("validate", "replay a solution file");
  AddInstanceArgs(validate, val_args, false);
  validate->add_option("--solution", sol_path)->required();
  validate->add_flag("--unbounded", val_unbounded, "ignore the stop limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*gen) {
      gsp::WriteTextFile(gen_out, gsp::WriteGraph(gsp::GenBinomial(gen_n, gen_p, gen_seed, gen_opts)));
      return kExitSolved;
    }

    if (*solve) {
      const gsp::Instance inst = MakeInstance(solve_args);
      const gsp::ReachGraph reach = Reach(solve_args, inst);
      gsp::RunOptions opts;
      opts.unbounded = unbounded;
      if (time_limit > 0.0) {
        opts.deadline = gsp::Clock::now() + std::chrono::duration_cast<gsp::Clock::duration>(
                                                std::chrono::duration<double>(time_limit));
      }
      const gsp::SolveResult r = gsp::RunSolver(algo, inst, reach, opts);
      const std::string doc = gsp::WriteSolutionJson(inst, r, unbounded, algo);
      if (!solve_out.empty()) gsp::WriteTextFile(solve_out, doc);
      if (as_json) {
        std::cout << doc;
      } else {
        PrintText(inst, r);
      }
      return StatusExit(r.status);
    }

    if (*bench) {
      const std::string base = std::filesystem::path(spec_path).parent_path().string();
      gsp::BenchSpec spec = gsp::ParseBenchSpec(gsp::ReadTextFile(spec_path),
                                                base.empty() ? "." : base);
      if (!bench_out.empty()) spec.out = bench_out;
      const std::string csv = gsp::BenchRun(spec);
      if (spec.out.empty()) {
        std::cout << csv;
      } else {
        gsp::WriteTextFile(spec.out, csv);
      }
      return kExitSolved;
    }

    if (*mip) {
      const gsp::Instance inst = MakeInstance(mip_args);
      const gsp::MipModel model = gsp::BuildMip(inst, Reach(mip_args, inst), !no_smart);
      for (const std::string& w : model.warnings) std::cerr << "warning: " << w << '\n';
      gsp::WriteTextFile(mip_out, gsp::WriteLp(model));
      return kExitSolved;
    }

    if (*validate) {
      auto graph = std::make_shared<const gsp::FuelGraph>(gsp::ReadGraphFile(val_args.graph));
      const gsp::SolutionDocument doc =
          gsp::ParseSolutionJson(*graph, gsp::ReadTextFile(sol_path));
      gsp::Instance inst{graph, doc.start, doc.goal, doc.q_max, doc.k_max, doc.q0};
      if (!doc.has_instance &&
          (val_args.start.empty() || val_args.goal.empty() || val_args.q_max <= 0.0)) {
        throw gsp::GspError(gsp::ErrorCode::kInvalidInstance,
                            "solution has no instance block; pass --start --goal --qmax --kmax");
      }
      if (!val_args.start.empty()) inst.start = Vertex(*graph, val_args.start, "start");
      if (!val_args.goal.empty()) inst.goal = Vertex(*graph, val_args.goal, "goal");
      if (val_args.q_max > 0.0) inst.q_max = val_args.q_max;
      if (!doc.has_instance || validate->count("--kmax")) inst.k_max = val_args.k_max;
      if (validate->count("--q0")) inst.q0 = val_args.q0;
      inst.Validate();
      if (doc.status != gsp::SolveStatus::kSolved) {
        std::cout << "status: " << gsp::SolveStatusName(doc.status) << " (nothing to replay)\n";
        return StatusExit(doc.status);
      }
      const gsp::ReachGraph reach = Reach(val_args, inst);
      const gsp::Solution sol = gsp::SolutionFromDocument(inst, reach, doc);
      const double cost = gsp::ValidateSolution(inst, reach, sol, doc.unbounded || val_unbounded);
      if (cost != doc.cost) {
        std::cerr << "invalid: replayed cost " << gsp::FormatNumber(cost)
                  << " differs from reported cost " << gsp::FormatNumber(doc.cost) << '\n';
        return kExitInvalid;
      }
      std::cout << "valid: cost " << gsp::FormatNumber(cost) << '\n';
      return kExitSolved;
    }
  } catch (const gsp::GspError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
