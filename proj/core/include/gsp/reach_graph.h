#ifndef GSP_REACH_GRAPH_H_
#define GSP_REACH_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsp/graph.h"

namespace gsp {

struct ReachEntry {
  VertexId vertex = 0;
  double fuel = 0.0;

  friend bool operator==(const ReachEntry&, const ReachEntry&) = default;
};

// The refuel graph: for every vertex u, every v != u whose minimum fuel
// distance from u is at most q_max, with that distance. Forward lists are
// sorted by destination id, reverse lists by source id.
class ReachGraph {
 public:
  ReachGraph() = default;
  ReachGraph(double q_max, std::uint64_t graph_hash,
             std::vector<std::vector<ReachEntry>> forward);

  int num_vertices() const { return static_cast<int>(forward_.size()); }
  std::int64_t num_edges() const { return num_edges_; }
  double q_max() const { return q_max_; }
  std::uint64_t graph_hash() const { return graph_hash_; }

  std::span<const ReachEntry> reachable(VertexId u) const { return forward_[u]; }
  // Predecessors of v with their distances to v.
  std::span<const ReachEntry> predecessors(VertexId v) const { return reverse_[v]; }
  int in_degree(VertexId v) const { return static_cast<int>(reverse_[v].size()); }

  std::optional<double> Distance(VertexId u, VertexId v) const;

  friend bool operator==(const ReachGraph& a, const ReachGraph& b) {
    return a.q_max_ == b.q_max_ && a.graph_hash_ == b.graph_hash_ &&
           a.forward_ == b.forward_;
  }

 private:
  double q_max_ = 0.0;
  std::uint64_t graph_hash_ = 0;
  std::int64_t num_edges_ = 0;
  std::vector<std::vector<ReachEntry>> forward_;
  std::vector<std::vector<ReachEntry>> reverse_;
};

// One Dijkstra per source over arc fuel, truncated at q_max: a vertex settled
// beyond q_max is dropped and not expanded.
ReachGraph ComputeReachableSets(const FuelGraph& graph, double q_max);

// Cache file (JSON): {"graph_hash": "<hex>", "q_max": x,
//   "reach": [[[v, fuel], ...], ...]}. Reading checks the key against the
// given graph and q_max and returns nullopt on a mismatch.
std::string SerializeReachGraph(const ReachGraph& reach);
ReachGraph DeserializeReachGraph(const std::string& text);
std::optional<ReachGraph> LoadReachCache(const std::string& path, const FuelGraph& graph,
                                         double q_max);
void SaveReachCache(const std::string& path, const ReachGraph& reach);

// Convenience: load from `path` when the key matches, else compute and save.
ReachGraph ReachGraphWithCache(const std::string& path, const FuelGraph& graph, double q_max);

}  // namespace gsp

#endif  // GSP_REACH_GRAPH_H_
