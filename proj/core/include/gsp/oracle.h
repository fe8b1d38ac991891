#ifndef GSP_ORACLE_H_
#define GSP_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gsp/reach_graph.h"
#include "gsp/search.h"
#include "gsp/types.h"

namespace gsp {

// Exhaustive reference solver for small instances with integral fuel data.
// It never uses the fill-up / fill-enough rule: every route is scheduled by a
// dynamic program over integer fuel levels 0..q_max, which is exact because
// the fixed-route problem has an integral optimum when fuel data is integral.

// A walk on the refuel graph. hop_fuel[i] is the distance from vertices[i] to
// vertices[i + 1].
struct Route {
  std::vector<VertexId> vertices;
  std::vector<double> hop_fuel;
};

struct RouteCost {
  double cost = 0.0;
  // Purchase at each route position; the last entry is always 0.
  std::vector<double> amounts;
};

// Cheapest integral refuelling schedule for a fixed route, starting with
// inst.q0 fuel. At most `stop_limit` positive purchases (negative: no limit).
// nullopt when no schedule exists. Throws kNonIntegralInput when q_max, q0 or
// a hop distance is not an integer.
std::optional<RouteCost> RouteMinCost(const Route& route, const Instance& inst,
                                      int stop_limit = -1);

struct OracleLimits {
  int max_vertices = 10;
  int max_k = 5;
  double max_q = 50.0;
};

// Called once per enumerated start-goal route with its minimum cost under the
// stop limit (nullopt when the route cannot be scheduled).
using RouteVisitor = std::function<void(const Route&, const std::optional<double>&)>;

// Enumerates every walk from start to goal on the refuel graph with at most
// k_max hops (k_max + 1 when q0 > 0, since the first hop may then be free),
// revisits allowed, and returns the cheapest schedule over all of them with
// at most k_max purchases. Throws kInstanceTooLarge beyond `limits` and
// kNonIntegralInput for fractional fuel data.
SolveResult BruteForceSolve(const Instance& inst, const ReachGraph& reach,
                            const RouteVisitor& visitor = {}, OracleLimits limits = {},
                            std::optional<Clock::time_point> deadline = std::nullopt);
SolveResult BruteForceSolve(const Instance& inst);

// Number of routes the last enumeration would visit; exposed for tests of
// the depth bound.
std::int64_t CountOracleRoutes(const Instance& inst, const ReachGraph& reach);

}  // namespace gsp

#endif  // GSP_ORACLE_H_
