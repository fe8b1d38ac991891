#ifndef GSP_TYPES_H_
#define GSP_TYPES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "gsp/graph.h"

namespace gsp {

// One query: a graph plus start, goal, tank capacity, stop limit and the fuel
// in the tank at the start. Graphs are shared between instances.
struct Instance {
  std::shared_ptr<const FuelGraph> graph;
  VertexId start = 0;
  VertexId goal = 0;
  double q_max = 0.0;
  int k_max = 1;
  double q0 = 0.0;

  const FuelGraph& g() const { return *graph; }

  // Throws GspError(kInvalidInstance) on a null graph, bad vertex ids,
  // q_max <= 0, k_max < 1 or q0 outside [0, q_max].
  void Validate() const;
};

// Partial solution at vertex `v`: money spent so far, fuel on arrival (before
// any purchase at v) and refuelling stops made so far. `parent` indexes the
// label arena of the solve that produced it (-1 for the initial label).
struct Label {
  VertexId v = 0;
  double g = 0.0;
  double q = 0.0;
  int k = 0;
  std::int32_t parent = -1;
  double refuel_at_parent = 0.0;
};

struct Stop {
  VertexId vertex = 0;
  double amount = 0.0;

  friend bool operator==(const Stop&, const Stop&) = default;
};

// A position on the refuel-graph route. `fuel` is the hop distance from the
// previous position (0 for the start), `refuel` the amount bought here.
struct Hop {
  VertexId vertex = 0;
  double fuel = 0.0;
  double refuel = 0.0;

  friend bool operator==(const Hop&, const Hop&) = default;
};

struct Solution {
  std::vector<Stop> stops;
  std::vector<Hop> route;
  double total_cost = 0.0;
  // Fuel on arrival at each route position, parallel to `route`.
  std::vector<double> arrival_fuel;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Builds the stop list and fuel trace from a route with per-hop purchases.
Solution MakeSolution(const Instance& inst, std::vector<Hop> route, double total_cost);

struct SearchStats {
  std::int64_t labels_generated = 0;
  std::int64_t labels_expanded = 0;
  std::int64_t labels_pruned = 0;
  std::int64_t dp_states_computed = 0;
  double heuristic_build_ms = 0.0;
  double search_ms = 0.0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

enum class SolveStatus { kSolved, kInfeasible, kTimeout };

std::string_view SolveStatusName(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Solution> solution;
  SearchStats stats;

  bool solved() const { return status == SolveStatus::kSolved; }
  double cost() const { return solution ? solution->total_cost : kInfinity; }
};

}  // namespace gsp

#endif  // GSP_TYPES_H_
