#include "gsp/oracle.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gsp/error.h"

namespace gsp {

namespace {

bool IsIntegral(double x) { return std::isfinite(x) && x == std::floor(x); }

void RequireIntegral(double x, const char* what) {
  if (!IsIntegral(x)) {
    throw GspError(ErrorCode::kNonIntegralInput, std::string(what) + " must be an integer");
  }
}

// Costs indexed by fuel * (stop_cap + 1) + stops.
class FuelStates {
 public:
  FuelStates(int q_max, int stop_cap)
      : q_max_(q_max), stop_cap_(stop_cap),
        cost_(static_cast<std::size_t>(q_max + 1) * (stop_cap + 1), kInfinity) {}

  int q_max() const { return q_max_; }
  int stop_cap() const { return stop_cap_; }
  std::size_t index(int fuel, int stops) const {
    return static_cast<std::size_t>(fuel) * (stop_cap_ + 1) + stops;
  }
  double& at(int fuel, int stops) { return cost_[index(fuel, stops)]; }
  double at(int fuel, int stops) const { return cost_[index(fuel, stops)]; }
  std::size_t size() const { return cost_.size(); }

  double Min() const { return *std::min_element(cost_.begin(), cost_.end()); }

 private:
  int q_max_;
  int stop_cap_;
  std::vector<double> cost_;
};

struct Choice {
  std::size_t from = 0;
  int amount = 0;
};

// Buy any integer amount at a vertex with `price`, then drive `hop` units.
FuelStates Advance(const FuelStates& in, double price, bool can_buy, int hop,
                   std::vector<Choice>* choices) {
  FuelStates out(in.q_max(), in.stop_cap());
  if (choices) choices->assign(out.size(), Choice{});
  for (int f = 0; f <= in.q_max(); ++f) {
    for (int s = 0; s <= in.stop_cap(); ++s) {
      const double base = in.at(f, s);
      if (base == kInfinity) continue;
      const int max_buy = can_buy && s < in.stop_cap() ? in.q_max() - f : 0;
      for (int b = std::max(0, hop - f); b <= max_buy; ++b) {
        const int ns = s + (b > 0 ? 1 : 0);
        const int nf = f + b - hop;
        const double value = b > 0 ? base + b * price : base;
        double& cell = out.at(nf, ns);
        if (value < cell) {
          cell = value;
          if (choices) (*choices)[out.index(nf, ns)] = Choice{in.index(f, s), b};
        }
      }
    }
  }
  return out;
}

struct OracleSetup {
  int q_max = 0;
  int q0 = 0;
  int max_hops = 0;
  int stop_cap = 0;
};

OracleSetup Prepare(const Instance& inst, const ReachGraph& reach) {
  RequireIntegral(inst.q_max, "q_max");
  RequireIntegral(inst.q0, "q0");
  for (VertexId u = 0; u < reach.num_vertices(); ++u) {
    for (const ReachEntry& e : reach.reachable(u)) RequireIntegral(e.fuel, "fuel distance");
  }
  OracleSetup s;
  s.q_max = static_cast<int>(inst.q_max);
  s.q0 = static_cast<int>(inst.q0);
  s.max_hops = inst.k_max + (inst.q0 > 0.0 ? 1 : 0);
  s.stop_cap = inst.k_max;
  return s;
}

}  // namespace

std::optional<RouteCost> RouteMinCost(const Route& route, const Instance& inst, int stop_limit) {
  inst.Validate();
  RequireIntegral(inst.q_max, "q_max");
  RequireIntegral(inst.q0, "q0");
  if (route.vertices.empty() || route.hop_fuel.size() + 1 != route.vertices.size()) {
    throw GspError(ErrorCode::kInvalidInstance, "route hop list does not match its vertices");
  }
  const FuelGraph& graph = inst.g();
  const int hops = static_cast<int>(route.hop_fuel.size());
  const int q_max = static_cast<int>(inst.q_max);
  const int cap = stop_limit < 0 ? hops : std::min(stop_limit, hops);

  std::vector<std::vector<Choice>> choices(hops);
  FuelStates states(q_max, cap);
  states.at(static_cast<int>(inst.q0), 0) = 0.0;
  for (int i = 0; i < hops; ++i) {
    RequireIntegral(route.hop_fuel[i], "hop fuel");
    if (route.hop_fuel[i] > inst.q_max) return std::nullopt;
    const VertexId u = route.vertices[i];
    states = Advance(states, graph.price(u), graph.refuellable(u),
                     static_cast<int>(route.hop_fuel[i]), &choices[i]);
  }

  std::size_t best = 0;
  double cost = kInfinity;
  for (int f = 0; f <= q_max; ++f) {
    for (int s = 0; s <= cap; ++s) {
      if (states.at(f, s) < cost) {
        cost = states.at(f, s);
        best = states.index(f, s);
      }
    }
  }
  if (cost == kInfinity) return std::nullopt;

  RouteCost out;
  out.cost = cost;
  out.amounts.assign(route.vertices.size(), 0.0);
  std::size_t cell = best;
  for (int i = hops - 1; i >= 0; --i) {
    out.amounts[i] = choices[i][cell].amount;
    cell = choices[i][cell].from;
  }
  return out;
}

SolveResult BruteForceSolve(const Instance& inst, const ReachGraph& reach,
                            const RouteVisitor& visitor, OracleLimits limits,
                            std::optional<Clock::time_point> deadline) {
  inst.Validate();
  const FuelGraph& graph = inst.g();
  if (graph.num_vertices() > limits.max_vertices || inst.k_max > limits.max_k ||
      inst.q_max > limits.max_q) {
    throw GspError(ErrorCode::kInstanceTooLarge,
                   "brute force is limited to n <= " + std::to_string(limits.max_vertices) +
                       ", k_max <= " + std::to_string(limits.max_k) +
                       ", q_max <= " + std::to_string(limits.max_q));
  }
  if (reach.num_vertices() != graph.num_vertices() || reach.q_max() != inst.q_max) {
    throw GspError(ErrorCode::kInvalidInstance,
                   "reach graph was built for a different graph or tank capacity");
  }
  const OracleSetup setup = Prepare(inst, reach);
  const auto t0 = Clock::now();
  SolveResult result;

  Route best_route;
  double best_cost = kInfinity;
  bool timed_out = false;
  std::int64_t nodes = 0;

  Route path;
  path.vertices.push_back(inst.start);
  std::vector<FuelStates> stack;
  stack.emplace_back(setup.q_max, setup.stop_cap);
  stack.back().at(setup.q0, 0) = 0.0;

  // Depth-first over walks; the fuel-state table of each prefix is shared by
  // all of its extensions.
  std::function<void()> dfs = [&]() {
    if (timed_out) return;
    if (deadline && (++nodes & 1023) == 0 && Clock::now() > *deadline) {
      timed_out = true;
      return;
    }
    const VertexId u = path.vertices.back();
    const int hops = static_cast<int>(path.hop_fuel.size());
    if (u == inst.goal && hops > 0) {
      const double cost = stack.back().Min();
      if (visitor) {
        visitor(path, cost == kInfinity ? std::nullopt : std::optional<double>(cost));
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_route = path;
      }
    }
    if (hops >= setup.max_hops) return;
    for (const ReachEntry& e : reach.reachable(u)) {
      FuelStates next = Advance(stack.back(), graph.price(u), graph.refuellable(u),
                                static_cast<int>(e.fuel), nullptr);
      if (next.Min() == kInfinity) continue;
      stack.push_back(std::move(next));
      path.vertices.push_back(e.vertex);
      path.hop_fuel.push_back(e.fuel);
      dfs();
      path.hop_fuel.pop_back();
      path.vertices.pop_back();
      stack.pop_back();
    }
  };

  if (inst.start == inst.goal) {
    best_cost = 0.0;
    best_route = path;
    if (visitor) visitor(path, 0.0);
  } else {
    dfs();
  }

  result.stats.search_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (timed_out) {
    result.status = SolveStatus::kTimeout;
    return result;
  }
  if (best_cost == kInfinity) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }

  std::vector<Hop> hops;
  if (best_route.hop_fuel.empty()) {
    hops.push_back(Hop{inst.start, 0.0, 0.0});
  } else {
    const auto schedule = RouteMinCost(best_route, inst, inst.k_max);
    for (std::size_t i = 0; i < best_route.vertices.size(); ++i) {
      hops.push_back(Hop{best_route.vertices[i], i == 0 ? 0.0 : best_route.hop_fuel[i - 1],
                         schedule->amounts[i]});
    }
  }
  result.status = SolveStatus::kSolved;
  result.solution = MakeSolution(inst, std::move(hops), best_cost);
  return result;
}

SolveResult BruteForceSolve(const Instance& inst) {
  inst.Validate();
  return BruteForceSolve(inst, ComputeReachableSets(inst.g(), inst.q_max));
}

std::int64_t CountOracleRoutes(const Instance& inst, const ReachGraph& reach) {
  std::int64_t count = 0;
  BruteForceSolve(inst, reach, [&](const Route&, const std::optional<double>&) { ++count; });
  return count;
}

}  // namespace gsp
