#include "gsp/bench.h"

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gsp/dp.h"
#include "gsp/error.h"
#include "gsp/format.h"
#include "gsp/generate.h"
#include "gsp/graph_io.h"
#include "gsp/oracle.h"

namespace gsp {

namespace {

using nlohmann::json;

constexpr const char* kSolvers[] = {"rfastar", "rfastar-noh", "rfastar-cached", "dp", "oracle"};

[[noreturn]] void Schema(const std::string& msg) { throw GspError(ErrorCode::kSchemaError, msg); }

double MillisSince(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VertexId SpecVertex(const FuelGraph& graph, const json& value, const std::string& where) {
  std::string key;
  if (value.is_string()) key = value.get<std::string>();
  else if (value.is_number_integer()) key = std::to_string(value.get<std::int64_t>());
  else Schema(where + " must be a vertex id");
  auto v = graph.FindVertex(key);
  if (!v) Schema(where + " names unknown vertex \"" + key + "\"");
  return *v;
}

double SpecNumber(const json& obj, const char* key, double fallback, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) Schema(where + "." + key + " must be a number");
  return it->get<double>();
}

int SpecInt(const json& obj, const char* key, int fallback, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) Schema(where + "." + key + " must be an integer");
  return it->get<int>();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool IsKnownSolver(const std::string& name) {
  for (const char* s : kSolvers) {
    if (name == s) return true;
  }
  return false;
}

SolveResult RunSolver(const std::string& name, const Instance& inst, const ReachGraph& reach,
                      const RunOptions& opts) {
  if (name == "rfastar" || name == "rfastar-noh" || name == "rfastar-cached") {
    SearchOptions so;
    so.use_heuristic = name != "rfastar-noh";
    so.use_cache = name == "rfastar-cached";
    so.cache = opts.cache;
    so.unbounded_stops = opts.unbounded;
    so.deadline = opts.deadline;
    return RfaStarSolve(inst, reach, so);
  }
  if (!IsKnownSolver(name)) {
    throw GspError(ErrorCode::kInvalidInstance, "unknown solver \"" + name + "\"");
  }
  if (opts.unbounded) {
    throw GspError(ErrorCode::kInvalidInstance, "unbounded mode is only implemented by rfastar");
  }
  if (name == "dp") return DpSolve(inst, reach, opts.deadline);
  return BruteForceSolve(inst, reach, {}, {}, opts.deadline);
}

BenchSpec ParseBenchSpec(const std::string& text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GspError(ErrorCode::kParseError, std::string("bench spec: ") + e.what());
  }
  if (!doc.is_object()) Schema("bench spec must be a JSON object");
  BenchSpec spec;

  auto graph_it = doc.find("graph");
  if (graph_it == doc.end()) Schema("spec.graph is missing");
  if (graph_it->is_string()) {
    std::filesystem::path path = graph_it->get<std::string>();
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    spec.graph = std::make_shared<const FuelGraph>(ReadGraphFile(path.string()));
  } else if (graph_it->is_object()) {
    const json& g = *graph_it;
    const int n = SpecInt(g, "n", 0, "spec.graph");
    const double p = SpecNumber(g, "p", 0.3, "spec.graph");
    const auto seed = static_cast<std::uint64_t>(SpecInt(g, "seed", 0, "spec.graph"));
    spec.graph = std::make_shared<const FuelGraph>(GenBinomial(n, p, seed));
  } else {
    Schema("spec.graph must be a path or a generator object");
  }
  const FuelGraph& graph = *spec.graph;

  auto inst_it = doc.find("instances");
  if (inst_it == doc.end()) Schema("spec.instances is missing");
  if (inst_it->is_array()) {
    for (std::size_t i = 0; i < inst_it->size(); ++i) {
      const json& in = (*inst_it)[i];
      const std::string where = "instances[" + std::to_string(i) + "]";
      if (!in.is_object()) Schema(where + " must be an object");
      BenchInstance bi;
      bi.id = in.contains("id") && in["id"].is_string() ? in["id"].get<std::string>()
                                                        : std::to_string(i);
      if (!in.contains("start") || !in.contains("goal")) Schema(where + " needs start and goal");
      bi.start = SpecVertex(graph, in["start"], where + ".start");
      bi.goal = SpecVertex(graph, in["goal"], where + ".goal");
      bi.q_max = SpecNumber(in, "q_max", 0.0, where);
      bi.k_max = SpecInt(in, "k_max", 1, where);
      bi.q0 = SpecNumber(in, "q0", 0.0, where);
      spec.instances.push_back(bi);
    }
  } else if (inst_it->is_object()) {
    const json& r = *inst_it;
    const int count = SpecInt(r, "count", 0, "spec.instances");
    const auto seed = static_cast<std::uint64_t>(SpecInt(r, "seed", 0, "spec.instances"));
    double mean = 0.0;
    for (const Edge& e : graph.edges()) mean += e.fuel;
    if (graph.num_edges() > 0) mean /= graph.num_edges();
    const double q_max = SpecNumber(r, "q_max", std::max(1.0, std::round(3.0 * mean)),
                                    "spec.instances");
    const int k_max = SpecInt(r, "k_max", 6, "spec.instances");
    if (graph.num_vertices() < 2 && count > 0) Schema("random instances need at least 2 vertices");
    SeededRng rng(seed);
    for (int i = 0; i < count; ++i) {
      BenchInstance bi;
      bi.id = std::to_string(i);
      bi.start = static_cast<VertexId>(rng.UniformInt(0, graph.num_vertices() - 1));
      do {
        bi.goal = static_cast<VertexId>(rng.UniformInt(0, graph.num_vertices() - 1));
      } while (bi.goal == bi.start);
      bi.q_max = q_max;
      bi.k_max = k_max;
      spec.instances.push_back(bi);
    }
  } else {
    Schema("spec.instances must be an array or a generator object");
  }

  auto solvers_it = doc.find("solvers");
  if (solvers_it == doc.end() || !solvers_it->is_array() || solvers_it->empty()) {
    Schema("spec.solvers must be a non-empty array");
  }
  for (const json& s : *solvers_it) {
    if (!s.is_string() || !IsKnownSolver(s.get<std::string>())) {
      Schema("spec.solvers contains an unknown solver " + s.dump());
    }
    spec.solvers.push_back(s.get<std::string>());
  }
  spec.time_limit_s = SpecNumber(doc, "time_limit_s", 30.0, "spec");
  if (!(spec.time_limit_s > 0.0)) Schema("spec.time_limit_s must be > 0");
  if (auto u = doc.find("unbounded"); u != doc.end()) {
    if (!u->is_boolean()) Schema("spec.unbounded must be a boolean");
    spec.unbounded = u->get<bool>();
  }
  if (auto o = doc.find("out"); o != doc.end() && o->is_string()) spec.out = o->get<std::string>();
  return spec;
}

std::string BenchRun(const BenchSpec& spec) {
  std::ostringstream csv;
  csv << kBenchCsvHeader << '\n';
  if (spec.instances.empty()) return csv.str();
  if (!spec.graph) throw GspError(ErrorCode::kInvalidInstance, "bench spec has no graph");

  HeuristicCache cache;
  std::map<double, ReachGraph> reach_by_q;
  const auto limit = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(spec.time_limit_s));

  for (const BenchInstance& bi : spec.instances) {
    Instance inst{spec.graph, bi.start, bi.goal, bi.q_max, bi.k_max, bi.q0};
    inst.Validate();
    auto it = reach_by_q.find(bi.q_max);
    if (it == reach_by_q.end()) {
      it = reach_by_q.emplace(bi.q_max, ComputeReachableSets(*spec.graph, bi.q_max)).first;
    }
    for (const std::string& solver : spec.solvers) {
      RunOptions opts;
      opts.unbounded = spec.unbounded;
      opts.cache = &cache;
      const auto t0 = Clock::now();
      opts.deadline = t0 + limit;
      SolveResult result;
      std::string status;
      try {
        result = RunSolver(solver, inst, it->second, opts);
        status = std::string(SolveStatusName(result.status));
      } catch (const GspError&) {
        status = "error";
      }
      const double total = MillisSince(t0);
      const SearchStats& s = result.stats;
      csv << CsvField(bi.id) << ',' << solver << ',' << status << ','
          << (result.solved() ? FormatNumber(result.cost()) : "") << ','
          << (result.solution ? std::to_string(result.solution->stops.size()) : "") << ','
          << s.labels_generated << ',' << s.labels_expanded << ',' << s.labels_pruned << ','
          << s.dp_states_computed << ',' << FormatNumber(s.heuristic_build_ms) << ','
          << FormatNumber(s.search_ms) << ',' << FormatNumber(total) << '\n';
    }
  }
  return csv.str();
}

}  // namespace gsp
