#ifndef GSP_SEARCH_H_
#define GSP_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "gsp/heuristic.h"
#include "gsp/reach_graph.h"
#include "gsp/types.h"

namespace gsp {

using Clock = std::chrono::steady_clock;

struct SearchOptions {
  // Off: h = 0 everywhere (the no-heuristic variant).
  bool use_heuristic = true;
  // Fetch the heuristic from `cache` (or the process-wide cache when null)
  // instead of rebuilding it. Build time is reported as 0 on a hit.
  bool use_cache = false;
  // Drop the stop limit and prune with scalarized dominance.
  bool unbounded_stops = false;
  // Testing only: never prune by dominance.
  bool disable_dominance = false;
  HeuristicCache* cache = nullptr;
  std::optional<Clock::time_point> deadline;
  // Called for every generated label, before the generation-time prune.
  std::function<void(const Label&)> on_generate;
};

HeuristicCache& DefaultHeuristicCache();

enum class DominanceMode { kBounded, kScalarized };

// Per-vertex sets of labels that survived the prune check at pop time.
// Insertion does not evict labels the new one dominates; stale entries are
// harmless for pruning and are filtered by NonDominated().
class Frontier {
 public:
  explicit Frontier(int num_vertices) : labels_(num_vertices) {}

  // True iff some stored label at l.v dominates l under `mode`. `price` is
  // the price at l.v and only matters for kScalarized.
  bool CheckForPrune(const Label& l, DominanceMode mode, double price) const;
  void Insert(const Label& l) { labels_[l.v].push_back(l); }

  std::span<const Label> labels(VertexId v) const { return labels_[v]; }
  // Stored labels at v not dominated by an earlier-stored or any other
  // strictly better label; pairwise non-dominated.
  std::vector<Label> NonDominated(VertexId v, DominanceMode mode, double price) const;

 private:
  std::vector<std::vector<Label>> labels_;
};

// Min-priority queue over f = g + h. Ties: larger q first, then fewer stops,
// then insertion order.
class OpenQueue {
 public:
  struct Entry {
    double f = 0.0;
    double q = 0.0;
    int k = 0;
    std::int64_t seq = 0;
    std::int32_t index = 0;  // into the label arena
  };

  void Push(double f, const Label& l, std::int32_t index);
  Entry Pop();
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.f != b.f) return a.f > b.f;
      if (a.q != b.q) return a.q < b.q;
      if (a.k != b.k) return a.k > b.k;
      return a.seq > b.seq;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Worse> heap_;
  std::int64_t next_seq_ = 0;
};

// Successors of `l` over the refuel graph, with refuel amounts from the
// fill-up / fill-enough rule:
//   - into the goal: buy d - q, arrive empty;
//   - price(v) < price(target): fill the tank, arrive with q_max - d;
//   - otherwise buy d - q, arrive empty.
// Successors that would buy nothing, that sit on a non-refuellable non-goal
// vertex, or whose heuristic is +inf are not produced. `ctx` may be null
// (h = 0). Children carry `parent_index` and stops k + 1.
std::vector<Label> Expand(const Label& l, std::int32_t parent_index, const ReachGraph& reach,
                          const Instance& inst, const HeuristicContext* ctx);

// Refuel A*. The returned solution is optimal; Infeasible and Timeout are
// reported through SolveResult::status. Throws GspError(kInvalidInstance) on
// malformed input or a reach graph built for a different tank.
SolveResult RfaStarSolve(const Instance& inst, const ReachGraph& reach,
                         const SearchOptions& opts = {});
SolveResult RfaStarSolve(const Instance& inst, const SearchOptions& opts = {});

// Same search without a stop limit (opts.unbounded_stops forced on).
SolveResult RfaStarSolveUnbounded(const Instance& inst, const ReachGraph& reach,
                                  SearchOptions opts = {});

}  // namespace gsp

#endif  // GSP_SEARCH_H_
