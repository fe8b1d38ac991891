#ifndef GSP_BENCH_H_
#define GSP_BENCH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsp/graph.h"
#include "gsp/heuristic.h"
#include "gsp/reach_graph.h"
#include "gsp/search.h"
#include "gsp/types.h"

namespace gsp {

struct BenchInstance {
  std::string id;
  VertexId start = 0;
  VertexId goal = 0;
  double q_max = 0.0;
  int k_max = 1;
  double q0 = 0.0;
};

// Spec file:
//   {"graph": "city.json"                       (path, relative to the spec)
//          | {"n": 64, "p": 0.3, "seed": 1},    (generated)
//    "instances": [{"id": "a", "start": "o", "goal": "t",
//                   "q_max": 6, "k_max": 2, "q0": 0}, ...]
//               | {"count": 100, "seed": 7, "k_max": 6, "q_max": 15},
//    "solvers": ["rfastar", "rfastar-noh", "rfastar-cached", "dp", "oracle"],
//    "time_limit_s": 30,
//    "unbounded": false,
//    "out": "results.csv"}
// For random instances q_max defaults to round(3 * mean edge fuel) and k_max
// to 6; start and goal are distinct vertices drawn from the seed.
struct BenchSpec {
  std::shared_ptr<const FuelGraph> graph;
  std::vector<BenchInstance> instances;
  std::vector<std::string> solvers;
  double time_limit_s = 30.0;
  bool unbounded = false;
  std::string out;
};

inline constexpr const char* kBenchCsvHeader =
    "instance_id,solver,status,cost,stops,labels_generated,labels_expanded,labels_pruned,"
    "dp_states,heuristic_build_ms,search_ms,total_ms";

bool IsKnownSolver(const std::string& name);

struct RunOptions {
  bool unbounded = false;
  std::optional<Clock::time_point> deadline;
  // Used by "rfastar-cached"; the process-wide cache when null.
  HeuristicCache* cache = nullptr;
};

// Dispatches to the named solver. Unbounded mode exists only for the rfastar
// variants; other solvers throw kInvalidInstance with it.
SolveResult RunSolver(const std::string& name, const Instance& inst, const ReachGraph& reach,
                      const RunOptions& opts = {});

// `base_dir` resolves a relative graph path. Throws kParseError/kSchemaError.
BenchSpec ParseBenchSpec(const std::string& text, const std::string& base_dir = ".");

// One row per (instance, solver), instance-major in spec order. Each cell
// gets its own deadline of time_limit_s; timed-out rows keep the counters
// reached so far. Rows whose solver rejects the instance (for instance the
// oracle beyond its size limits) get status "error". Cells run sequentially
// so timings do not compete for cores.
std::string BenchRun(const BenchSpec& spec);

}  // namespace gsp

#endif  // GSP_BENCH_H_
