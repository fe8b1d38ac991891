#include "gsp/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

#include "gsp/error.h"

namespace gsp {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void HashBytes(std::uint64_t value, std::uint64_t& h) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kVertexMismatch: return "VertexMismatch";
    case ErrorCode::kTankExceeded: return "TankExceeded";
    case ErrorCode::kFuelNegative: return "FuelNegative";
    case ErrorCode::kTooManyStops: return "TooManyStops";
    case ErrorCode::kBadEndpoints: return "BadEndpoints";
    case ErrorCode::kHopNotReachable: return "HopNotReachable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kNonIntegralInput: return "NonIntegralInput";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kTransformInapplicable: return "TransformInapplicable";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

FuelGraph::FuelGraph(std::vector<double> prices, std::vector<Edge> edges,
                     std::vector<std::string> names)
    : prices_(std::move(prices)), names_(std::move(names)) {
  const int n = num_vertices();
  for (int v = 0; v < n; ++v) {
    const double p = prices_[v];
    if (std::isnan(p) || p < 0.0) {
      throw GspError(ErrorCode::kSchemaError,
                     "vertex " + std::to_string(v) + " has a negative price");
    }
  }
  if (names_.empty()) {
    names_.reserve(n);
    for (int v = 0; v < n; ++v) names_.push_back(std::to_string(v));
  } else if (static_cast<int>(names_.size()) != n) {
    throw GspError(ErrorCode::kSchemaError, "name count does not match vertex count");
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!valid_vertex(e.from) || !valid_vertex(e.to)) {
      throw GspError(ErrorCode::kSchemaError, where + " has an unknown endpoint");
    }
    if (e.from == e.to) {
      throw GspError(ErrorCode::kSchemaError, where + " is a self-loop");
    }
    if (!(e.fuel > 0.0) || !std::isfinite(e.fuel)) {
      throw GspError(ErrorCode::kSchemaError, where + ".fuel must be > 0");
    }
  }

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.fuel < b.fuel;
  });
  for (const Edge& e : edges) {
    if (!edges_.empty() && edges_.back().from == e.from && edges_.back().to == e.to) {
      continue;  // sorted, so the first copy carries the minimum fuel
    }
    edges_.push_back(e);
  }

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.from + 1];
    ++in_offsets_[e.to + 1];
  }
  for (int v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_arcs_.resize(edges_.size());
  in_arcs_.resize(edges_.size());
  std::vector<int> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<int> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    out_arcs_[out_fill[e.from]++] = Arc{e.to, e.fuel};
    in_arcs_[in_fill[e.to]++] = Arc{e.from, e.fuel};
  }

  std::uint64_t h = kFnvOffset;
  HashBytes(static_cast<std::uint64_t>(n), h);
  for (double p : prices_) HashBytes(std::bit_cast<std::uint64_t>(p), h);
  for (const Edge& e : edges_) {
    HashBytes(static_cast<std::uint64_t>(e.from), h);
    HashBytes(static_cast<std::uint64_t>(e.to), h);
    HashBytes(std::bit_cast<std::uint64_t>(e.fuel), h);
  }
  hash_ = h;
}

std::optional<VertexId> FuelGraph::FindVertex(const std::string& name) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

double FuelGraph::max_edge_fuel() const {
  double m = 0.0;
  for (const Edge& e : edges_) m = std::max(m, e.fuel);
  return m;
}

}  // namespace gsp
