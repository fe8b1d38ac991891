#include "gsp/heuristic.h"

#include <algorithm>
#include <functional>
#include <mutex>
#include <queue>

namespace gsp {

double HeuristicContext::Estimate(VertexId v, double q) const {
  const double d = d_to_goal[v];
  if (d == kInfinity) return kInfinity;
  return std::max((d - q) * c_min, 0.0);
}

HeuristicContext BuildHeuristic(const FuelGraph& graph, VertexId goal) {
  const int n = graph.num_vertices();
  HeuristicContext ctx;
  ctx.goal = goal;
  ctx.d_to_goal.assign(n, kInfinity);

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  ctx.d_to_goal[goal] = 0.0;
  heap.emplace(0.0, goal);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > ctx.d_to_goal[v]) continue;
    for (const Arc& arc : graph.in_arcs(v)) {
      const double nd = d + arc.fuel;
      if (nd < ctx.d_to_goal[arc.other]) {
        ctx.d_to_goal[arc.other] = nd;
        heap.emplace(nd, arc.other);
      }
    }
  }

  double c_min = kInfinity;
  for (VertexId v = 0; v < n; ++v) {
    if (v != goal && graph.refuellable(v)) c_min = std::min(c_min, graph.price(v));
  }
  ctx.c_min = c_min == kInfinity ? 0.0 : c_min;
  return ctx;
}

std::shared_ptr<const HeuristicContext> HeuristicCache::Get(const FuelGraph& graph,
                                                            VertexId goal, bool* built) {
  const auto key = std::make_pair(graph.content_hash(), goal);
  if (built) *built = false;
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto ctx = std::make_shared<const HeuristicContext>(BuildHeuristic(graph, goal));
  if (built) *built = true;
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, std::move(ctx));
  return it->second;
}

std::size_t HeuristicCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void HeuristicCache::Clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

}  // namespace gsp
