#include "gsp/validate.h"

#include <string>

#include "gsp/error.h"

namespace gsp {

double ValidateSolution(const Instance& inst, const ReachGraph& reach, const Solution& sol,
                        bool unbounded) {
  inst.Validate();
  const FuelGraph& graph = inst.g();
  const auto& route = sol.route;
  if (route.empty() || route.front().vertex != inst.start) {
    throw GspError(ErrorCode::kBadEndpoints, "route must start at the start vertex");
  }
  if (route.back().vertex != inst.goal) {
    throw GspError(ErrorCode::kBadEndpoints, "route must end at the goal vertex");
  }

  double fuel = inst.q0;
  double cost = 0.0;
  int stops = 0;
  std::size_t next_stop = 0;
  for (std::size_t i = 0; i < route.size(); ++i) {
    const Hop& hop = route[i];
    const std::string where = "route[" + std::to_string(i) + "]";
    if (!graph.valid_vertex(hop.vertex)) {
      throw GspError(ErrorCode::kBadEndpoints, where + " has an unknown vertex");
    }
    if (i > 0) {
      const auto d = reach.Distance(route[i - 1].vertex, hop.vertex);
      if (!d) {
        throw GspError(ErrorCode::kHopNotReachable,
                       where + " is not reachable on a full tank from the previous position");
      }
      fuel -= *d;
      if (fuel < 0.0) throw GspError(ErrorCode::kFuelNegative, where + " arrives with negative fuel");
    }
    if (hop.refuel < 0.0) {
      throw GspError(ErrorCode::kHopNotReachable, where + " has a negative purchase");
    }
    if (hop.refuel > 0.0) {
      if (!graph.refuellable(hop.vertex)) {
        throw GspError(ErrorCode::kHopNotReachable, where + " buys fuel at a non-refuellable vertex");
      }
      if (next_stop >= sol.stops.size() || sol.stops[next_stop].vertex != hop.vertex ||
          sol.stops[next_stop].amount != hop.refuel) {
        throw GspError(ErrorCode::kBadEndpoints, where + " purchase disagrees with the stop list");
      }
      ++next_stop;
      ++stops;
      if (!unbounded && stops > inst.k_max) {
        throw GspError(ErrorCode::kTooManyStops, "stop " + std::to_string(stops) + " at " + where +
                                                     " exceeds k_max");
      }
      fuel += hop.refuel;
      if (fuel > inst.q_max) throw GspError(ErrorCode::kTankExceeded, where + " overfills the tank");
      cost += hop.refuel * graph.price(hop.vertex);
    }
  }
  if (next_stop != sol.stops.size()) {
    throw GspError(ErrorCode::kBadEndpoints, "stop list has entries not on the route");
  }
  return cost;
}

double ValidateSolution(const Instance& inst, const Solution& sol, bool unbounded) {
  inst.Validate();
  return ValidateSolution(inst, ComputeReachableSets(inst.g(), inst.q_max), sol, unbounded);
}

}  // namespace gsp
