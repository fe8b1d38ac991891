#ifndef GSP_TESTS_SUPPORT_FIXTURES_H_
#define GSP_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gsp/oracle.h"
#include "gsp/reach_graph.h"
#include "gsp/types.h"

namespace gsp::testing {

// Four-vertex worked example: o(2) a(3) b(1) t(5), undirected fuels
// o-a 2, o-b 5, a-t 5, b-t 5. Vertex ids: o=0, a=1, b=2, t=3.
inline constexpr VertexId kO = 0, kA = 1, kB = 2, kT = 3;
std::shared_ptr<const FuelGraph> T1Graph();
Instance T1(double q_max = 6, int k_max = 2, double q0 = 0);

// Small random integral instance: n in [4, 8], p = 0.5, fuels and prices in
// 1..10, q_max in [5, 15], k_max in [1, 4], distinct start and goal.
Instance SmallRandomInstance(std::uint64_t seed);

// Same graph and endpoints but an integral q0 in (0, q_max).
Instance WithRandomQ0(const Instance& inst, std::uint64_t seed);

// Fill-up / fill-enough schedule along a fixed route, starting from inst.q0:
// at each refuellable position buy up to q_max when the next position is not
// the last one and is pricier, else buy just enough for the hop (possibly 0).
// nullopt when the schedule runs dry or uses more than k_max stops.
struct Lemma1Schedule {
  double cost = 0.0;
  std::vector<double> amounts;
  bool all_positive = true;
};
std::optional<Lemma1Schedule> Lemma1RouteCost(const Route& route, const Instance& inst);

// The route restricted to its start, the positions where `amounts` buys
// fuel, and its last vertex; hop fuel is summed over the dropped positions.
Route CompressToStops(const Route& route, const std::vector<double>& amounts);

// Exact cheapest completion C(v, q, r) from vertex v holding q fuel with r
// purchases left, over integer purchase amounts and refuel-graph arcs.
// C(goal, q, r) = 0. Integral data only.
class CompletionOracle {
 public:
  CompletionOracle(const Instance& inst, const ReachGraph& reach);
  double Cost(VertexId v, int q, int r) const;
  int q_max() const { return q_max_; }
  int k_max() const { return k_max_; }

 private:
  std::size_t Index(VertexId v, int q, int r) const;
  int n_, q_max_, k_max_;
  std::vector<double> cost_;
};

}  // namespace gsp::testing

#endif  // GSP_TESTS_SUPPORT_FIXTURES_H_
