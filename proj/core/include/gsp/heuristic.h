#ifndef GSP_HEURISTIC_H_
#define GSP_HEURISTIC_H_

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "gsp/graph.h"
#include "gsp/types.h"

namespace gsp {

// Cost-to-go lower bound for one goal. d_to_goal holds the unconstrained
// minimum fuel from every vertex to the goal (+inf when disconnected); c_min
// is the cheapest finite price over all non-goal vertices, or 0 when there is
// none, which turns the estimate into h = 0.
struct HeuristicContext {
  VertexId goal = 0;
  std::vector<double> d_to_goal;
  double c_min = 0.0;

  // max((d_to_goal(v) - q) * c_min, 0); +inf when the goal is unreachable
  // from v even with an unlimited tank.
  double Estimate(VertexId v, double q) const;
  double Estimate(const Label& l) const { return Estimate(l.v, l.q); }
};

// Backward Dijkstra from the goal over arc fuel, ignoring tank and prices.
HeuristicContext BuildHeuristic(const FuelGraph& graph, VertexId goal);

// Goal-keyed store of heuristic contexts, keyed by (graph content hash, goal).
// Readers run concurrently; when two threads build the same key the first
// insertion wins. No eviction.
class HeuristicCache {
 public:
  // `built` is set to true when this call ran the Dijkstra.
  std::shared_ptr<const HeuristicContext> Get(const FuelGraph& graph, VertexId goal,
                                              bool* built = nullptr);

  std::size_t size() const;
  void Clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::uint64_t, VertexId>, std::shared_ptr<const HeuristicContext>>
      entries_;
};

}  // namespace gsp

#endif  // GSP_HEURISTIC_H_
