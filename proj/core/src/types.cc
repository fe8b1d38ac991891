#include "gsp/types.h"

#include <cmath>
#include <string>
#include <utility>

#include "gsp/error.h"

namespace gsp {

void Instance::Validate() const {
  if (!graph) throw GspError(ErrorCode::kInvalidInstance, "instance has no graph");
  if (!graph->valid_vertex(start)) {
    throw GspError(ErrorCode::kInvalidInstance, "start vertex out of range");
  }
  if (!graph->valid_vertex(goal)) {
    throw GspError(ErrorCode::kInvalidInstance, "goal vertex out of range");
  }
  if (!(q_max > 0.0) || !std::isfinite(q_max)) {
    throw GspError(ErrorCode::kInvalidInstance, "q_max must be a positive finite number");
  }
  if (k_max < 1) throw GspError(ErrorCode::kInvalidInstance, "k_max must be >= 1");
  if (!(q0 >= 0.0 && q0 <= q_max)) {
    throw GspError(ErrorCode::kInvalidInstance, "q0 must lie in [0, q_max]");
  }
}

Solution MakeSolution(const Instance& inst, std::vector<Hop> route, double total_cost) {
  Solution sol;
  sol.total_cost = total_cost;
  double fuel = inst.q0;
  for (std::size_t i = 0; i < route.size(); ++i) {
    if (i > 0) fuel -= route[i].fuel;
    sol.arrival_fuel.push_back(fuel);
    if (route[i].refuel > 0.0) {
      sol.stops.push_back(Stop{route[i].vertex, route[i].refuel});
      fuel += route[i].refuel;
    }
  }
  sol.route = std::move(route);
  return sol;
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolved: return "solved";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

}  // namespace gsp
