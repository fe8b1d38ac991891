#ifndef GSP_VALIDATE_H_
#define GSP_VALIDATE_H_

#include "gsp/reach_graph.h"
#include "gsp/types.h"

namespace gsp {

// Replays `sol` hop by hop on refuel-graph distances, starting at the start
// vertex with q0 fuel, and returns the recomputed cost sum(amount * price) in
// route order. Throws GspError naming the first violation:
//   kBadEndpoints    route does not start at the start or end at the goal,
//                    or the stop list disagrees with the route purchases;
//   kHopNotReachable hop is not a refuel-graph arc, or a purchase happens at
//                    a non-refuellable vertex or is negative;
//   kTankExceeded    fuel after a purchase exceeds q_max;
//   kFuelNegative    fuel after a hop drops below 0;
//   kTooManyStops    more than k_max purchases (ignored when `unbounded`).
// The hop fuel stored in the route is ignored; distances come from `reach`.
double ValidateSolution(const Instance& inst, const ReachGraph& reach, const Solution& sol,
                        bool unbounded = false);
double ValidateSolution(const Instance& inst, const Solution& sol, bool unbounded = false);

}  // namespace gsp

#endif  // GSP_VALIDATE_H_
