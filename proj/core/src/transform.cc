#include "gsp/transform.h"

#include <memory>
#include <string>
#include <vector>

#include "gsp/error.h"

namespace gsp {

Instance ApplyInitialFuelTransform(const Instance& inst) {
  inst.Validate();
  if (inst.q0 == 0.0) {
    throw GspError(ErrorCode::kTransformInapplicable, "q0 is 0; the instance already starts empty");
  }
  if (inst.q0 == inst.q_max) {
    throw GspError(ErrorCode::kTransformInapplicable,
                   "q0 equals q_max; the pseudo arc would have zero fuel");
  }
  const FuelGraph& g = inst.g();
  const VertexId pseudo = g.num_vertices();
  std::vector<double> prices = g.prices();
  prices.push_back(0.0);
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge{pseudo, inst.start, inst.q_max - inst.q0});
  std::vector<std::string> names = g.names();
  std::string name = "pseudo";
  while (g.FindVertex(name)) name += "_";
  names.push_back(name);

  Instance out = inst;
  out.graph = std::make_shared<const FuelGraph>(std::move(prices), std::move(edges), std::move(names));
  out.start = pseudo;
  out.q0 = 0.0;
  out.k_max = inst.k_max + 1;
  return out;
}

}  // namespace gsp
