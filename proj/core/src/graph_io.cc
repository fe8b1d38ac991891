#include "gsp/graph_io.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gsp/error.h"

namespace gsp {

namespace {

using nlohmann::json;

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw GspError(ErrorCode::kParseError, "line " + std::to_string(line) + ", column " +
                                               std::to_string(column) + ": invalid JSON");
  }
}

[[noreturn]] void Schema(const std::string& msg) { throw GspError(ErrorCode::kSchemaError, msg); }

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) Schema(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) Schema(where + "." + key + " is missing");
  return *it;
}

double Number(const json& value, const std::string& where) {
  if (!value.is_number()) Schema(where + " must be a number");
  return value.get<double>();
}

std::string VertexKey(const json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  // Integer ids are accepted and read as their decimal text.
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  Schema(where + " must be a vertex id string");
}

VertexId Lookup(const FuelGraph& graph, const json& value, const std::string& where) {
  const std::string key = VertexKey(value, where);
  auto v = graph.FindVertex(key);
  if (!v) Schema(where + " names unknown vertex \"" + key + "\"");
  return *v;
}

json NumberJson(double x) {
  if (x == kInfinity) return nullptr;
  if (x == static_cast<double>(static_cast<std::int64_t>(x))) return static_cast<std::int64_t>(x);
  return x;
}

json StatsJson(const SearchStats& s) {
  return json{{"labels_generated", s.labels_generated},
              {"labels_expanded", s.labels_expanded},
              {"labels_pruned", s.labels_pruned},
              {"dp_states", s.dp_states_computed},
              {"heuristic_build_ms", s.heuristic_build_ms},
              {"search_ms", s.search_ms}};
}

}  // namespace

FuelGraph ParseGraph(const std::string& text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) Schema("graph file must be a JSON object");
  bool directed = true;
  if (auto it = doc.find("directed"); it != doc.end()) {
    if (!it->is_boolean()) Schema("directed must be a boolean");
    directed = it->get<bool>();
  }
  const json& vertices = Field(doc, "vertices", "graph");
  if (!vertices.is_array()) Schema("vertices must be an array");
  std::vector<double> prices;
  std::vector<std::string> names;
  std::map<std::string, VertexId> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const std::string id = VertexKey(Field(vertices[i], "id", where), where + ".id");
    if (!ids.emplace(id, static_cast<VertexId>(i)).second) {
      Schema(where + ".id \"" + id + "\" is not unique");
    }
    const json& price = Field(vertices[i], "price", where);
    if (price.is_null()) {
      prices.push_back(kNonRefuellable);
    } else {
      const double p = Number(price, where + ".price");
      if (!(p >= 0.0) || !std::isfinite(p)) Schema(where + ".price must be >= 0 or null");
      prices.push_back(p);
    }
    names.push_back(id);
  }

  const json& edges = Field(doc, "edges", "graph");
  if (!edges.is_array()) Schema("edges must be an array");
  std::vector<Edge> arcs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    auto endpoint = [&](const char* key) {
      const std::string key_where = where + "." + key;
      const std::string id = VertexKey(Field(edges[i], key, where), key_where);
      auto it = ids.find(id);
      if (it == ids.end()) Schema(key_where + " names unknown vertex \"" + id + "\"");
      return it->second;
    };
    const VertexId from = endpoint("from");
    const VertexId to = endpoint("to");
    const double fuel = Number(Field(edges[i], "fuel", where), where + ".fuel");
    if (!(fuel > 0.0) || !std::isfinite(fuel)) Schema(where + ".fuel must be > 0");
    if (from == to) Schema(where + " is a self-loop");
    arcs.push_back(Edge{from, to, fuel});
    if (!directed) arcs.push_back(Edge{to, from, fuel});
  }
  return FuelGraph(std::move(prices), std::move(arcs), std::move(names));
}

std::string WriteGraph(const FuelGraph& graph) {
  json vertices = json::array();
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    vertices.push_back(json{{"id", graph.name(v)},
                            {"price", graph.refuellable(v) ? NumberJson(graph.price(v)) : json(nullptr)}});
  }
  json edges = json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back(
        json{{"from", graph.name(e.from)}, {"to", graph.name(e.to)}, {"fuel", NumberJson(e.fuel)}});
  }
  json doc{{"directed", true}, {"vertices", vertices}, {"edges", edges}};
  return doc.dump(1) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GspError(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GspError(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw GspError(ErrorCode::kIoError, "write failed for " + path);
}

FuelGraph ReadGraphFile(const std::string& path) { return ParseGraph(ReadTextFile(path)); }

std::string WriteSolutionJson(const Instance& inst, const SolveResult& result, bool unbounded,
                              const std::string& algo) {
  const FuelGraph& graph = inst.g();
  json doc;
  doc["status"] = std::string(SolveStatusName(result.status));
  doc["algo"] = algo;
  doc["cost"] = result.solved() ? NumberJson(result.cost()) : json(nullptr);
  json stops = json::array();
  json route = json::array();
  if (result.solution) {
    for (const Stop& s : result.solution->stops) {
      stops.push_back(json{{"vertex", graph.name(s.vertex)}, {"amount", NumberJson(s.amount)}});
    }
    for (const Hop& h : result.solution->route) route.push_back(graph.name(h.vertex));
  }
  doc["stops"] = stops;
  doc["route"] = route;
  doc["stats"] = StatsJson(result.stats);
  doc["instance"] = json{{"start", graph.name(inst.start)}, {"goal", graph.name(inst.goal)},
                         {"q_max", NumberJson(inst.q_max)}, {"k_max", inst.k_max},
                         {"q0", NumberJson(inst.q0)},       {"unbounded", unbounded}};
  return doc.dump(1) + "\n";
}

SolutionDocument ParseSolutionJson(const FuelGraph& graph, const std::string& text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) Schema("solution file must be a JSON object");
  SolutionDocument out;
  if (auto it = doc.find("status"); it != doc.end()) {
    const std::string s = it->is_string() ? it->get<std::string>() : "";
    if (s == "solved") out.status = SolveStatus::kSolved;
    else if (s == "infeasible") out.status = SolveStatus::kInfeasible;
    else if (s == "timeout") out.status = SolveStatus::kTimeout;
    else Schema("status must be solved, infeasible or timeout");
  }
  const json& cost = Field(doc, "cost", "solution");
  out.cost = cost.is_null() ? kInfinity : Number(cost, "cost");

  const json& stops = Field(doc, "stops", "solution");
  if (!stops.is_array()) Schema("stops must be an array");
  for (std::size_t i = 0; i < stops.size(); ++i) {
    const std::string where = "stops[" + std::to_string(i) + "]";
    out.stops.push_back(Stop{Lookup(graph, Field(stops[i], "vertex", where), where + ".vertex"),
                             Number(Field(stops[i], "amount", where), where + ".amount")});
  }
  const json& route = Field(doc, "route", "solution");
  if (!route.is_array()) Schema("route must be an array");
  for (std::size_t i = 0; i < route.size(); ++i) {
    out.route.push_back(Lookup(graph, route[i], "route[" + std::to_string(i) + "]"));
  }

  if (auto it = doc.find("instance"); it != doc.end() && !it->is_null()) {
    const json& in = *it;
    out.has_instance = true;
    out.start = Lookup(graph, Field(in, "start", "instance"), "instance.start");
    out.goal = Lookup(graph, Field(in, "goal", "instance"), "instance.goal");
    out.q_max = Number(Field(in, "q_max", "instance"), "instance.q_max");
    const json& k = Field(in, "k_max", "instance");
    if (!k.is_number_integer()) Schema("instance.k_max must be an integer");
    out.k_max = k.get<int>();
    if (auto q0 = in.find("q0"); q0 != in.end()) out.q0 = Number(*q0, "instance.q0");
    if (auto u = in.find("unbounded"); u != in.end()) {
      if (!u->is_boolean()) Schema("instance.unbounded must be a boolean");
      out.unbounded = u->get<bool>();
    }
  }
  return out;
}

Solution SolutionFromDocument(const Instance& inst, const ReachGraph& reach,
                              const SolutionDocument& doc) {
  std::vector<Hop> hops;
  std::size_t next_stop = 0;
  for (std::size_t i = 0; i < doc.route.size(); ++i) {
    Hop hop{doc.route[i], 0.0, 0.0};
    if (i > 0) hop.fuel = reach.Distance(doc.route[i - 1], hop.vertex).value_or(kInfinity);
    if (next_stop < doc.stops.size() && doc.stops[next_stop].vertex == hop.vertex) {
      hop.refuel = doc.stops[next_stop].amount;
      ++next_stop;
    }
    hops.push_back(hop);
  }
  Solution sol = MakeSolution(inst, std::move(hops), doc.cost);
  // Unmatched stops are kept so the validator reports the disagreement.
  for (; next_stop < doc.stops.size(); ++next_stop) sol.stops.push_back(doc.stops[next_stop]);
  return sol;
}

}  // namespace gsp
