#include "gsp/search.h"

#include <algorithm>
#include <utility>

#include "gsp/dominance.h"
#include "gsp/error.h"

namespace gsp {

namespace {

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool LabelDominates(const Label& stored, const Label& l, DominanceMode mode, double price) {
  return mode == DominanceMode::kBounded ? Dominates(stored, l)
                                         : ScalarizedDominates(stored, l, price);
}

Solution Reconstruct(const std::vector<Label>& arena, std::int32_t index,
                     const ReachGraph& reach, const Instance& inst) {
  std::vector<std::int32_t> chain;
  for (std::int32_t i = index; i >= 0; i = arena[i].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());

  std::vector<Hop> route;
  route.reserve(chain.size());
  for (std::size_t pos = 0; pos < chain.size(); ++pos) {
    const Label& l = arena[chain[pos]];
    Hop hop{l.v, 0.0, 0.0};
    if (pos > 0) hop.fuel = *reach.Distance(arena[chain[pos - 1]].v, l.v);
    if (pos + 1 < chain.size()) hop.refuel = arena[chain[pos + 1]].refuel_at_parent;
    route.push_back(hop);
  }
  return MakeSolution(inst, std::move(route), arena[index].g);
}

}  // namespace

HeuristicCache& DefaultHeuristicCache() {
  static HeuristicCache cache;
  return cache;
}

bool Frontier::CheckForPrune(const Label& l, DominanceMode mode, double price) const {
  for (const Label& stored : labels_[l.v]) {
    if (LabelDominates(stored, l, mode, price)) return true;
  }
  return false;
}

std::vector<Label> Frontier::NonDominated(VertexId v, DominanceMode mode, double price) const {
  const auto& all = labels_[v];
  std::vector<Label> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (i == j || !LabelDominates(all[j], all[i], mode, price)) continue;
      // Mutual dominance: keep the earlier-stored label only.
      dominated = !LabelDominates(all[i], all[j], mode, price) || j < i;
    }
    if (!dominated) kept.push_back(all[i]);
  }
  return kept;
}

void OpenQueue::Push(double f, const Label& l, std::int32_t index) {
  heap_.push(Entry{f, l.q, l.k, next_seq_++, index});
}

OpenQueue::Entry OpenQueue::Pop() {
  Entry top = heap_.top();
  heap_.pop();
  return top;
}

std::vector<Label> Expand(const Label& l, std::int32_t parent_index, const ReachGraph& reach,
                          const Instance& inst, const HeuristicContext* ctx) {
  std::vector<Label> children;
  const FuelGraph& graph = inst.g();
  if (!graph.refuellable(l.v)) return children;
  const double price = graph.price(l.v);

  for (const ReachEntry& target : reach.reachable(l.v)) {
    const VertexId next = target.vertex;
    if (next != inst.goal && !graph.refuellable(next)) continue;

    double amount;
    double arrival;
    if (next != inst.goal && price < graph.price(next)) {
      amount = inst.q_max - l.q;
      arrival = inst.q_max - target.fuel;
    } else {
      amount = target.fuel - l.q;
      arrival = 0.0;
    }
    if (amount <= 0.0) continue;

    Label child{next, l.g + amount * price, arrival, l.k + 1, parent_index, amount};
    if (ctx != nullptr && ctx->Estimate(child) == kInfinity) continue;
    children.push_back(child);
  }
  return children;
}

SolveResult RfaStarSolve(const Instance& inst, const ReachGraph& reach,
                         const SearchOptions& opts) {
  inst.Validate();
  const FuelGraph& graph = inst.g();
  if (reach.num_vertices() != graph.num_vertices() || reach.q_max() != inst.q_max) {
    throw GspError(ErrorCode::kInvalidInstance,
                   "reach graph was built for a different graph or tank capacity");
  }

  SolveResult result;
  SearchStats& stats = result.stats;

  std::shared_ptr<const HeuristicContext> ctx;
  if (opts.use_heuristic) {
    const auto t0 = Clock::now();
    bool built = true;
    if (opts.use_cache) {
      HeuristicCache& cache = opts.cache ? *opts.cache : DefaultHeuristicCache();
      ctx = cache.Get(graph, inst.goal, &built);
    } else {
      ctx = std::make_shared<const HeuristicContext>(BuildHeuristic(graph, inst.goal));
    }
    stats.heuristic_build_ms = built ? MillisSince(t0) : 0.0;
  }
  const HeuristicContext* h = ctx.get();

  const auto t_search = Clock::now();
  const DominanceMode mode =
      opts.unbounded_stops ? DominanceMode::kScalarized : DominanceMode::kBounded;
  const bool prune = !opts.disable_dominance;

  std::vector<Label> arena;
  OpenQueue open;
  Frontier frontier(graph.num_vertices());

  auto offer = [&](const Label& l) {
    ++stats.labels_generated;
    if (opts.on_generate) opts.on_generate(l);
    if (prune && frontier.CheckForPrune(l, mode, graph.price(l.v))) {
      ++stats.labels_pruned;
      return;
    }
    const double hv = h ? h->Estimate(l) : 0.0;
    arena.push_back(l);
    open.Push(l.g + hv, l, static_cast<std::int32_t>(arena.size() - 1));
  };

  const Label initial{inst.start, 0.0, inst.q0, 0, -1, 0.0};
  if (h == nullptr || h->Estimate(initial) != kInfinity) {
    offer(initial);
    // Fuel already in the tank can carry the vehicle past the start without
    // a purchase there; those moves use no stop.
    if (inst.q0 > 0.0 && inst.start != inst.goal) {
      for (const ReachEntry& target : reach.reachable(inst.start)) {
        if (target.fuel > inst.q0) continue;
        if (target.vertex != inst.goal && !graph.refuellable(target.vertex)) continue;
        Label moved{target.vertex, 0.0, inst.q0 - target.fuel, 0, 0, 0.0};
        if (h != nullptr && h->Estimate(moved) == kInfinity) continue;
        offer(moved);
      }
    }
  }

  std::int64_t iterations = 0;
  while (!open.empty()) {
    if (opts.deadline && (++iterations & 255) == 0 && Clock::now() > *opts.deadline) {
      result.status = SolveStatus::kTimeout;
      stats.search_ms = MillisSince(t_search);
      return result;
    }
    const std::int32_t index = open.Pop().index;
    const Label l = arena[index];
    if (prune) {
      if (frontier.CheckForPrune(l, mode, graph.price(l.v))) {
        ++stats.labels_pruned;
        continue;
      }
      frontier.Insert(l);
    }
    if (l.v == inst.goal) {
      result.status = SolveStatus::kSolved;
      result.solution = Reconstruct(arena, index, reach, inst);
      stats.search_ms = MillisSince(t_search);
      return result;
    }
    if (!opts.unbounded_stops && l.k >= inst.k_max) continue;
    if (!graph.refuellable(l.v)) continue;

    ++stats.labels_expanded;
    for (const Label& child : Expand(l, index, reach, inst, h)) offer(child);
  }

  result.status = SolveStatus::kInfeasible;
  stats.search_ms = MillisSince(t_search);
  return result;
}

SolveResult RfaStarSolve(const Instance& inst, const SearchOptions& opts) {
  inst.Validate();
  return RfaStarSolve(inst, ComputeReachableSets(inst.g(), inst.q_max), opts);
}

SolveResult RfaStarSolveUnbounded(const Instance& inst, const ReachGraph& reach,
                                  SearchOptions opts) {
  opts.unbounded_stops = true;
  return RfaStarSolve(inst, reach, opts);
}

}  // namespace gsp
