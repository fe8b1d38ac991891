#ifndef GSP_GRAPH_IO_H_
#define GSP_GRAPH_IO_H_

#include <string>

#include "gsp/graph.h"
#include "gsp/reach_graph.h"
#include "gsp/types.h"

namespace gsp {

// Graph file:
//   {"directed": bool,
//    "vertices": [{"id": "o", "price": 2}, {"id": "t", "price": null}, ...],
//    "edges": [{"from": "o", "to": "a", "fuel": 2}, ...]}
// A null price marks a vertex that sells no fuel. Undirected files get both
// arcs. Throws kParseError for malformed JSON (with line and column) and
// kSchemaError naming the offending entity.
FuelGraph ParseGraph(const std::string& text);

// Always written as a directed file; ParseGraph(WriteGraph(g)) == g.
std::string WriteGraph(const FuelGraph& graph);

FuelGraph ReadGraphFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);
std::string ReadTextFile(const std::string& path);

// Solution file:
//   {"status": "solved", "cost": 15,
//    "stops": [{"vertex": "o", "amount": 5}, ...],
//    "route": ["o", "b", "t"],
//    "stats": {...},
//    "instance": {"start": "o", "goal": "t", "q_max": 6, "k_max": 2, "q0": 0,
//                 "unbounded": false}}
// "instance" is optional on input.
struct SolutionDocument {
  SolveStatus status = SolveStatus::kSolved;
  double cost = kInfinity;
  std::vector<Stop> stops;
  std::vector<VertexId> route;
  SearchStats stats;
  bool has_instance = false;
  VertexId start = 0;
  VertexId goal = 0;
  double q_max = 0.0;
  int k_max = 1;
  double q0 = 0.0;
  bool unbounded = false;
};

std::string WriteSolutionJson(const Instance& inst, const SolveResult& result, bool unbounded,
                              const std::string& algo);
SolutionDocument ParseSolutionJson(const FuelGraph& graph, const std::string& text);

// Rebuilds hops from a vertex route and a stop list. Stops are matched to
// route positions greedily in order, so a vertex visited twice takes its
// purchase at the first visit that lines up with the stop list. Hop fuel is
// looked up in `reach`; a missing arc leaves fuel at +inf for the validator
// to reject.
Solution SolutionFromDocument(const Instance& inst, const ReachGraph& reach,
                              const SolutionDocument& doc);

}  // namespace gsp

#endif  // GSP_GRAPH_IO_H_
