#include "gsp/reach_graph.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "gsp/error.h"

namespace gsp {

ReachGraph::ReachGraph(double q_max, std::uint64_t graph_hash,
                       std::vector<std::vector<ReachEntry>> forward)
    : q_max_(q_max), graph_hash_(graph_hash), forward_(std::move(forward)) {
  reverse_.resize(forward_.size());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    auto& list = forward_[u];
    std::sort(list.begin(), list.end(),
              [](const ReachEntry& a, const ReachEntry& b) { return a.vertex < b.vertex; });
    num_edges_ += static_cast<std::int64_t>(list.size());
    // Iterating u in order keeps every reverse list sorted by source.
    for (const ReachEntry& e : list) reverse_[e.vertex].push_back(ReachEntry{u, e.fuel});
  }
}

std::optional<double> ReachGraph::Distance(VertexId u, VertexId v) const {
  const auto& list = forward_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const ReachEntry& e, VertexId x) { return e.vertex < x; });
  if (it == list.end() || it->vertex != v) return std::nullopt;
  return it->fuel;
}

ReachGraph ComputeReachableSets(const FuelGraph& graph, double q_max) {
  const int n = graph.num_vertices();
  std::vector<std::vector<ReachEntry>> forward(n);
  std::vector<double> dist(n, kInfinity);
  std::vector<char> settled(n, 0);
  std::vector<VertexId> touched;
  using Item = std::pair<double, VertexId>;

  for (VertexId source = 0; source < n; ++source) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0.0;
    touched.push_back(source);
    heap.emplace(0.0, source);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (settled[u] || d > dist[u]) continue;
      if (d > q_max) break;  // everything left is out of range
      settled[u] = 1;
      if (u != source) forward[source].push_back(ReachEntry{u, d});
      for (const Arc& arc : graph.out_arcs(u)) {
        const double nd = d + arc.fuel;
        if (nd < dist[arc.other]) {
          if (dist[arc.other] == kInfinity) touched.push_back(arc.other);
          dist[arc.other] = nd;
          heap.emplace(nd, arc.other);
        }
      }
    }
    for (VertexId v : touched) {
      dist[v] = kInfinity;
      settled[v] = 0;
    }
    touched.clear();
  }
  return ReachGraph(q_max, graph.content_hash(), std::move(forward));
}

namespace {

std::string HashToHex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string SerializeReachGraph(const ReachGraph& reach) {
  nlohmann::json doc;
  doc["graph_hash"] = HashToHex(reach.graph_hash());
  doc["q_max"] = reach.q_max();
  nlohmann::json lists = nlohmann::json::array();
  for (VertexId u = 0; u < reach.num_vertices(); ++u) {
    nlohmann::json list = nlohmann::json::array();
    for (const ReachEntry& e : reach.reachable(u)) list.push_back({e.vertex, e.fuel});
    lists.push_back(std::move(list));
  }
  doc["reach"] = std::move(lists);
  return doc.dump();
}

ReachGraph DeserializeReachGraph(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const std::uint64_t hash =
        std::stoull(doc.at("graph_hash").get<std::string>(), nullptr, 16);
    const double q_max = doc.at("q_max").get<double>();
    std::vector<std::vector<ReachEntry>> forward;
    for (const auto& list : doc.at("reach")) {
      auto& out = forward.emplace_back();
      for (const auto& pair : list) {
        out.push_back(ReachEntry{pair.at(0).get<VertexId>(), pair.at(1).get<double>()});
      }
    }
    return ReachGraph(q_max, hash, std::move(forward));
  } catch (const nlohmann::json::exception& e) {
    throw GspError(ErrorCode::kParseError, std::string("reach cache: ") + e.what());
  } catch (const std::logic_error& e) {
    throw GspError(ErrorCode::kParseError, std::string("reach cache: ") + e.what());
  }
}

std::optional<ReachGraph> LoadReachCache(const std::string& path, const FuelGraph& graph,
                                         double q_max) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  ReachGraph reach = DeserializeReachGraph(buffer.str());
  if (reach.graph_hash() != graph.content_hash() || reach.q_max() != q_max ||
      reach.num_vertices() != graph.num_vertices()) {
    return std::nullopt;
  }
  return reach;
}

void SaveReachCache(const std::string& path, const ReachGraph& reach) {
  std::ofstream out(path);
  if (!out) throw GspError(ErrorCode::kIoError, "cannot write " + path);
  out << SerializeReachGraph(reach) << '\n';
}

ReachGraph ReachGraphWithCache(const std::string& path, const FuelGraph& graph, double q_max) {
  if (auto cached = LoadReachCache(path, graph, q_max)) return *std::move(cached);
  ReachGraph reach = ComputeReachableSets(graph, q_max);
  SaveReachCache(path, reach);
  return reach;
}

}  // namespace gsp
