#include "gsp/dp.h"

#include <algorithm>
#include <utility>

#include "gsp/error.h"

namespace gsp {

namespace {

int LevelIndex(const std::vector<double>& levels, double q) {
  auto it = std::lower_bound(levels.begin(), levels.end(), q);
  if (it == levels.end() || *it != q) return -1;
  return static_cast<int>(it - levels.begin());
}

// Refuel-graph arc with the arrival level index precomputed for fill-up.
struct DpArc {
  VertexId to;
  double fuel;
  int fill_up_level;  // -1 when fill-up does not apply
};

}  // namespace

std::vector<double> GasValues(const Instance& inst, const ReachGraph& reach, VertexId v) {
  const FuelGraph& graph = inst.g();
  std::vector<double> levels{0.0};
  if (v != inst.goal) {
    for (const ReachEntry& pred : reach.predecessors(v)) {
      if (graph.refuellable(pred.vertex) && graph.price(pred.vertex) < graph.price(v)) {
        levels.push_back(inst.q_max - pred.fuel);
      }
    }
  }
  if (inst.q0 > 0.0) {
    if (v == inst.start) levels.push_back(inst.q0);
    if (auto d = reach.Distance(inst.start, v); d && *d <= inst.q0) {
      levels.push_back(inst.q0 - *d);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

DpTable::DpTable(const Instance& inst, const ReachGraph& reach) : layers_(inst.k_max + 1) {
  const int n = inst.g().num_vertices();
  gas_values_.reserve(n);
  offsets_.assign(1, 0);
  for (VertexId v = 0; v < n; ++v) {
    gas_values_.push_back(GasValues(inst, reach, v));
    offsets_.push_back(offsets_.back() + static_cast<std::int64_t>(gas_values_.back().size()));
  }
  const std::int64_t total = layers_ * cells_per_layer();
  cost_.assign(total, kInfinity);
  back_cell_.assign(total, -1);
  back_amount_.assign(total, 0.0);
}

double DpTable::At(VertexId v, int k, double q) const {
  if (k < 0 || k >= layers_) return kInfinity;
  const int level = LevelIndex(gas_values_[v], q);
  return level < 0 ? kInfinity : cost_[CellIndex(v, k, level)];
}

SolveResult DpSolve(const Instance& inst, const ReachGraph& reach,
                    std::optional<Clock::time_point> deadline, DpTable* table_out) {
  inst.Validate();
  const FuelGraph& graph = inst.g();
  if (reach.num_vertices() != graph.num_vertices() || reach.q_max() != inst.q_max) {
    throw GspError(ErrorCode::kInvalidInstance,
                   "reach graph was built for a different graph or tank capacity");
  }
  const auto t0 = Clock::now();
  const int n = graph.num_vertices();
  SolveResult result;
  DpTable table(inst, reach);

  std::vector<std::vector<DpArc>> arcs(n);
  for (VertexId u = 0; u < n; ++u) {
    if (u == inst.goal || !graph.refuellable(u)) continue;
    for (const ReachEntry& e : reach.reachable(u)) {
      if (e.vertex != inst.goal && !graph.refuellable(e.vertex)) continue;
      int level = -1;
      if (e.vertex != inst.goal && graph.price(u) < graph.price(e.vertex)) {
        level = LevelIndex(table.gas_values_[e.vertex], inst.q_max - e.fuel);
      }
      arcs[u].push_back(DpArc{e.vertex, e.fuel, level});
    }
  }

  // Base layer: the start, plus positions reachable on the initial fuel.
  const std::int64_t base = table.CellIndex(inst.start, 0, LevelIndex(table.gas_values_[inst.start], inst.q0));
  table.cost_[base] = 0.0;
  if (inst.q0 > 0.0 && inst.start != inst.goal) {
    for (const ReachEntry& e : reach.reachable(inst.start)) {
      if (e.fuel > inst.q0) continue;
      if (e.vertex != inst.goal && !graph.refuellable(e.vertex)) continue;
      const std::int64_t cell =
          table.CellIndex(e.vertex, 0, LevelIndex(table.gas_values_[e.vertex], inst.q0 - e.fuel));
      table.cost_[cell] = 0.0;
      table.back_cell_[cell] = base;
    }
  }

  std::int64_t computed = 0;
  for (int k = 1; k <= inst.k_max; ++k) {
    for (VertexId u = 0; u < n; ++u) {
      if (deadline && Clock::now() > *deadline) {
        result.status = SolveStatus::kTimeout;
        result.stats.dp_states_computed = computed;
        result.stats.search_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return result;
      }
      if (arcs[u].empty()) continue;
      const auto& levels = table.gas_values_[u];
      const double price = graph.price(u);
      for (int qi = 0; qi < static_cast<int>(levels.size()); ++qi) {
        const std::int64_t from = table.CellIndex(u, k - 1, qi);
        const double base_cost = table.cost_[from];
        if (base_cost == kInfinity) continue;
        const double q = levels[qi];
        for (const DpArc& arc : arcs[u]) {
          double amount;
          int level;
          if (arc.fill_up_level >= 0) {
            amount = inst.q_max - q;
            level = arc.fill_up_level;
          } else {
            amount = arc.fuel - q;
            level = 0;
          }
          if (amount <= 0.0) continue;
          const double value = base_cost + amount * price;
          const std::int64_t to = table.CellIndex(arc.to, k, level);
          double& cell = table.cost_[to];
          if (cell == kInfinity) ++computed;
          if (value < cell) {
            cell = value;
            table.back_cell_[to] = from;
            table.back_amount_[to] = amount;
          }
        }
      }
    }
  }
  result.stats.dp_states_computed = computed;

  std::int64_t best = -1;
  const auto& goal_levels = table.gas_values_[inst.goal];
  for (int k = 0; k <= inst.k_max; ++k) {
    for (int qi = 0; qi < static_cast<int>(goal_levels.size()); ++qi) {
      const std::int64_t cell = table.CellIndex(inst.goal, k, qi);
      if (table.cost_[cell] == kInfinity) continue;
      if (best < 0 || table.cost_[cell] < table.cost_[best]) best = cell;
    }
  }

  if (best < 0) {
    result.status = SolveStatus::kInfeasible;
  } else {
    std::vector<std::int64_t> chain;
    for (std::int64_t c = best; c >= 0; c = table.back_cell_[c]) chain.push_back(c);
    std::reverse(chain.begin(), chain.end());
    auto vertex_of = [&](std::int64_t cell) {
      const std::int64_t in_layer = cell % table.cells_per_layer();
      auto it = std::upper_bound(table.offsets_.begin(), table.offsets_.end(), in_layer);
      return static_cast<VertexId>(it - table.offsets_.begin() - 1);
    };
    std::vector<Hop> route;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      Hop hop{vertex_of(chain[i]), 0.0, 0.0};
      if (i > 0) hop.fuel = *reach.Distance(route.back().vertex, hop.vertex);
      if (i + 1 < chain.size()) hop.refuel = table.back_amount_[chain[i + 1]];
      route.push_back(hop);
    }
    result.status = SolveStatus::kSolved;
    result.solution = MakeSolution(inst, std::move(route), table.cost_[best]);
  }
  result.stats.search_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (table_out) *table_out = std::move(table);
  return result;
}

SolveResult DpSolve(const Instance& inst) {
  inst.Validate();
  return DpSolve(inst, ComputeReachableSets(inst.g(), inst.q_max));
}

}  // namespace gsp
