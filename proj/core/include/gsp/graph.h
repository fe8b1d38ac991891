#ifndef GSP_GRAPH_H_
#define GSP_GRAPH_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gsp {

using VertexId = std::int32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Price sentinel for vertices where the vehicle cannot buy fuel.
inline constexpr double kNonRefuellable = kInfinity;

struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  double fuel = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Adjacency entry. For out-arcs `other` is the head, for in-arcs the tail.
struct Arc {
  VertexId other = 0;
  double fuel = 0.0;
};

// Directed graph of gas stations: a price per vertex and a fuel consumption
// per arc. Immutable after construction.
class FuelGraph {
 public:
  FuelGraph() = default;

  // Validates and normalizes the input: rejects self-loops, out-of-range
  // endpoints, non-positive or non-finite fuel, and negative prices.
  // Duplicate arcs collapse to the minimum fuel. `names` may be empty, in
  // which case vertices are named by their index.
  FuelGraph(std::vector<double> prices, std::vector<Edge> edges,
            std::vector<std::string> names = {});

  int num_vertices() const { return static_cast<int>(prices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  double price(VertexId v) const { return prices_[v]; }
  bool refuellable(VertexId v) const { return prices_[v] != kNonRefuellable; }
  const std::vector<double>& prices() const { return prices_; }

  // Sorted by (from, to).
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Arc> out_arcs(VertexId v) const {
    return {out_arcs_.data() + out_offsets_[v],
            out_arcs_.data() + out_offsets_[v + 1]};
  }
  std::span<const Arc> in_arcs(VertexId v) const {
    return {in_arcs_.data() + in_offsets_[v],
            in_arcs_.data() + in_offsets_[v + 1]};
  }

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> FindVertex(const std::string& name) const;

  bool valid_vertex(VertexId v) const { return v >= 0 && v < num_vertices(); }

  double max_edge_fuel() const;

  // FNV-1a over the bit patterns of prices and arcs. Stable across runs and
  // platforms with IEEE-754 doubles.
  std::uint64_t content_hash() const { return hash_; }

  friend bool operator==(const FuelGraph& a, const FuelGraph& b) {
    return a.prices_ == b.prices_ && a.edges_ == b.edges_ &&
           a.names_ == b.names_;
  }

 private:
  std::vector<double> prices_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::vector<int> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<int> in_offsets_{0};
  std::vector<Arc> in_arcs_;
  std::uint64_t hash_ = 0;
};

}  // namespace gsp

#endif  // GSP_GRAPH_H_
