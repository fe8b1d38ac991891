#ifndef GSP_DP_H_
#define GSP_DP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "gsp/reach_graph.h"
#include "gsp/search.h"
#include "gsp/types.h"

namespace gsp {

// Fuel levels a vertex can be entered with under the fill-up / fill-enough
// rule, sorted ascending:
//   {0} + {q_max - d : (u -> v, d) in reach, price(u) < price(v)}
// The goal only ever gets {0}. With q0 > 0 the start also gets q0, and every
// vertex within q0 of the start gets q0 - d (arrival without a purchase).
std::vector<double> GasValues(const Instance& inst, const ReachGraph& reach, VertexId v);

// Forward table A(v, k, q): cheapest cost from the start to v using exactly
// k stops and arriving with fuel q. Cells are laid out layer by layer; within
// a layer vertex by vertex, then by fuel-level index.
class DpTable {
 public:
  DpTable(const Instance& inst, const ReachGraph& reach);

  int layers() const { return layers_; }
  std::int64_t cells_per_layer() const { return offsets_.back(); }
  const std::vector<double>& gas_values(VertexId v) const { return gas_values_[v]; }

  std::int64_t CellIndex(VertexId v, int k, int level) const {
    return k * cells_per_layer() + offsets_[v] + level;
  }
  // +inf for unreached cells and fuel levels outside GV(v).
  double At(VertexId v, int k, double q) const;

 private:
  friend SolveResult DpSolve(const Instance&, const ReachGraph&, std::optional<Clock::time_point>,
                             DpTable*);

  int layers_ = 0;
  std::vector<std::vector<double>> gas_values_;
  std::vector<std::int64_t> offsets_;
  std::vector<double> cost_;
  std::vector<std::int64_t> back_cell_;
  std::vector<double> back_amount_;
};

// Naive O(k_max n^3) dynamic program over the refuel graph. Layer k is built
// from layer k - 1 only; the answer is the cheapest goal cell over all
// layers. SearchStats::dp_states_computed counts cells with k >= 1 that
// received a finite value. `table_out`, when given, receives the full table.
SolveResult DpSolve(const Instance& inst, const ReachGraph& reach,
                    std::optional<Clock::time_point> deadline = std::nullopt,
                    DpTable* table_out = nullptr);
SolveResult DpSolve(const Instance& inst);

}  // namespace gsp

#endif  // GSP_DP_H_
