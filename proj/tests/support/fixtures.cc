#include "fixtures.h"

#include <algorithm>

#include "gsp/generate.h"

namespace gsp::testing {

std::shared_ptr<const FuelGraph> T1Graph() {
  std::vector<Edge> edges;
  auto both = [&](VertexId u, VertexId v, double d) {
    edges.push_back(Edge{u, v, d});
    edges.push_back(Edge{v, u, d});
  };
  both(kO, kA, 2);
  both(kO, kB, 5);
  both(kA, kT, 5);
  both(kB, kT, 5);
  return std::make_shared<const FuelGraph>(std::vector<double>{2, 3, 1, 5}, std::move(edges),
                                           std::vector<std::string>{"o", "a", "b", "t"});
}

Instance T1(double q_max, int k_max, double q0) {
  return Instance{T1Graph(), kO, kT, q_max, k_max, q0};
}

Instance SmallRandomInstance(std::uint64_t seed) {
  SeededRng rng(seed * 0x9e3779b97f4a7c15ull + 17);
  const int n = static_cast<int>(rng.UniformInt(4, 8));
  auto graph = std::make_shared<const FuelGraph>(GenBinomial(n, 0.5, seed));
  Instance inst;
  inst.graph = graph;
  inst.start = static_cast<VertexId>(rng.UniformInt(0, n - 1));
  do {
    inst.goal = static_cast<VertexId>(rng.UniformInt(0, n - 1));
  } while (inst.goal == inst.start);
  inst.q_max = static_cast<double>(rng.UniformInt(5, 15));
  inst.k_max = static_cast<int>(rng.UniformInt(1, 4));
  return inst;
}

Instance WithRandomQ0(const Instance& inst, std::uint64_t seed) {
  SeededRng rng(seed + 991);
  Instance out = inst;
  out.q0 = static_cast<double>(rng.UniformInt(1, static_cast<std::int64_t>(inst.q_max) - 1));
  return out;
}

std::optional<Lemma1Schedule> Lemma1RouteCost(const Route& route, const Instance& inst) {
  const FuelGraph& g = inst.g();
  Lemma1Schedule s;
  s.amounts.assign(route.vertices.size(), 0.0);
  double q = inst.q0;
  int stops = 0;
  for (std::size_t i = 0; i + 1 < route.vertices.size(); ++i) {
    const VertexId v = route.vertices[i];
    const VertexId next = route.vertices[i + 1];
    const double d = route.hop_fuel[i];
    double buy = 0.0;
    if (g.refuellable(v)) {
      // "Into the goal" means the route's final position; a walk may pass
      // through the goal vertex earlier.
      const bool final_hop = i + 2 == route.vertices.size();
      if (!final_hop && g.price(v) < g.price(next)) {
        buy = inst.q_max - q;
      } else {
        buy = std::max(d - q, 0.0);
      }
    }
    if (buy > 0.0) {
      ++stops;
      s.cost += buy * g.price(v);
    } else {
      s.all_positive = false;
    }
    s.amounts[i] = buy;
    q += buy - d;
    if (q < 0.0) return std::nullopt;
  }
  if (stops > inst.k_max) return std::nullopt;
  return s;
}

Route CompressToStops(const Route& route, const std::vector<double>& amounts) {
  Route out;
  out.vertices.push_back(route.vertices.front());
  double pending = 0.0;
  for (std::size_t i = 1; i < route.vertices.size(); ++i) {
    pending += route.hop_fuel[i - 1];
    if (i + 1 == route.vertices.size() || amounts[i] > 0.0) {
      out.vertices.push_back(route.vertices[i]);
      out.hop_fuel.push_back(pending);
      pending = 0.0;
    }
  }
  return out;
}

CompletionOracle::CompletionOracle(const Instance& inst, const ReachGraph& reach)
    : n_(inst.g().num_vertices()),
      q_max_(static_cast<int>(inst.q_max)),
      k_max_(inst.k_max),
      cost_(static_cast<std::size_t>(n_) * (q_max_ + 1) * (k_max_ + 1), kInfinity) {
  const FuelGraph& g = inst.g();
  // C(., ., r) needs C(., smaller q, r) for free hops and C(., ., r - 1)
  // after a purchase, so fill r ascending, then q ascending.
  for (int r = 0; r <= k_max_; ++r) {
    for (int q = 0; q <= q_max_; ++q) {
      for (VertexId v = 0; v < n_; ++v) {
        double best = kInfinity;
        if (v == inst.goal) {
          best = 0.0;
        } else {
          for (const ReachEntry& e : reach.reachable(v)) {
            const int d = static_cast<int>(e.fuel);
            const int max_buy = g.refuellable(v) && r > 0 ? q_max_ - q : 0;
            for (int b = std::max(0, d - q); b <= max_buy; ++b) {
              const double rest = Cost(e.vertex, q + b - d, b > 0 ? r - 1 : r);
              if (rest == kInfinity) continue;
              best = std::min(best, (b > 0 ? b * g.price(v) : 0.0) + rest);
            }
          }
        }
        cost_[Index(v, q, r)] = best;
      }
    }
  }
}

std::size_t CompletionOracle::Index(VertexId v, int q, int r) const {
  return (static_cast<std::size_t>(r) * (q_max_ + 1) + q) * n_ + v;
}

double CompletionOracle::Cost(VertexId v, int q, int r) const {
  if (q < 0 || q > q_max_ || r < 0 || r > k_max_) return kInfinity;
  return cost_[Index(v, q, r)];
}

}  // namespace gsp::testing
