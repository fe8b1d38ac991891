#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.h"
#include "gsp/error.h"
#include "gsp/search.h"
#include "gsp/validate.h"

namespace gsp {
namespace {

using testing::kA;
using testing::kB;
using testing::kO;
using testing::kT;

bool SameLabel(const Label& a, const Label& b) {
  return a.v == b.v && a.g == b.g && a.q == b.q && a.k == b.k;
}

TEST(Expand, WorkedExampleInitialLabel) {
  const Instance inst = testing::T1();
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  const HeuristicContext h = BuildHeuristic(inst.g(), inst.goal);
  const auto children = Expand(Label{kO, 0, 0, 0}, 0, reach, inst, &h);
  ASSERT_EQ(children.size(), 2u);
  EXPECT_TRUE(SameLabel(children[0], Label{kA, 12, 4, 1}));
  EXPECT_TRUE(SameLabel(children[1], Label{kB, 10, 0, 1}));
  EXPECT_EQ(children[0].refuel_at_parent, 6);
  EXPECT_EQ(children[1].parent, 0);
}

TEST(Expand, IntoGoalFillsJustEnough) {
  const Instance inst = testing::T1();
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  const auto children = Expand(Label{kA, 12, 4, 1}, 3, reach, inst, nullptr);
  auto it = std::find_if(children.begin(), children.end(), [](const Label& l) { return l.v == kT; });
  ASSERT_NE(it, children.end());
  EXPECT_TRUE(SameLabel(*it, Label{kT, 15, 0, 2}));
}

TEST(Expand, FullTankTowardPricierTargetsYieldsNothing) {
  // Every target of v0 costs more, so fill-up buys q_max - q = 0.
  const FuelGraph g({1, 5, 5}, {{0, 1, 2}, {0, 2, 3}});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 2, 6, 2, 6};
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  const auto children = Expand(Label{0, 0, 6, 0}, 0, reach, inst, nullptr);
  // Only the goal remains, and it needs 3 - 6 < 0.
  EXPECT_TRUE(children.empty());
}

TEST(Expand, SkipsNonRefuellableTargetsExceptGoal) {
  const FuelGraph g({1, kNonRefuellable, kNonRefuellable}, {{0, 1, 1}, {0, 2, 2}});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 2, 6, 2, 0};
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  const auto children = Expand(Label{0, 0, 0, 0}, 0, reach, inst, nullptr);
  ASSERT_EQ(children.size(), 1u);
  EXPECT_TRUE(SameLabel(children[0], Label{2, 2, 0, 1}));
}

TEST(Frontier, CheckForPrune) {
  Frontier f(4);
  EXPECT_FALSE(f.CheckForPrune(Label{kO, 20, 0, 2}, DominanceMode::kBounded, 2));
  f.Insert(Label{kO, 0, 0, 0});
  EXPECT_TRUE(f.CheckForPrune(Label{kO, 20, 0, 2}, DominanceMode::kBounded, 2));
  f.Insert(Label{kA, 10, 3, 1});
  EXPECT_FALSE(f.CheckForPrune(Label{kA, 9, 1, 1}, DominanceMode::kBounded, 3));
  EXPECT_EQ(f.labels(kA).size(), 1u);
}

TEST(Frontier, NonDominatedFiltersStaleEntries) {
  Frontier f(1);
  f.Insert(Label{0, 10, 0, 1});
  f.Insert(Label{0, 5, 2, 1});
  f.Insert(Label{0, 7, 5, 0});
  f.Insert(Label{0, 7, 5, 0});
  const auto kept = f.NonDominated(0, DominanceMode::kBounded, 1);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].g, 5);
  EXPECT_EQ(kept[1].g, 7);
}

TEST(OpenQueue, TieOrder) {
  OpenQueue q;
  q.Push(5, Label{0, 5, 0, 1}, 0);
  q.Push(5, Label{0, 5, 2, 2}, 1);
  q.Push(5, Label{0, 5, 2, 1}, 2);
  q.Push(4, Label{0, 4, 0, 3}, 3);
  q.Push(5, Label{0, 5, 2, 1}, 4);
  std::vector<int> order;
  while (!q.empty()) order.push_back(q.Pop().index);
  EXPECT_EQ(order, (std::vector<int>{3, 2, 4, 1, 0}));
}

TEST(RfaStar, WorkedExample) {
  const Instance inst = testing::T1();
  std::vector<Label> generated;
  SearchOptions opts;
  opts.on_generate = [&](const Label& l) { generated.push_back(l); };
  const SolveResult r = RfaStarSolve(inst, opts);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.cost(), 15);
  EXPECT_EQ(ValidateSolution(inst, *r.solution), 15);
  auto seen = [&](const Label& want) {
    return std::any_of(generated.begin(), generated.end(),
                       [&](const Label& l) { return SameLabel(l, want); });
  };
  EXPECT_TRUE(seen(Label{kA, 12, 4, 1}));
  EXPECT_TRUE(seen(Label{kB, 10, 0, 1}));
  EXPECT_EQ(r.solution->route.back().vertex, kT);
  EXPECT_EQ(r.solution->arrival_fuel.back(), 0);
  EXPECT_LE(r.stats.labels_expanded, r.stats.labels_generated);
}

TEST(RfaStar, WorkedExampleVariants) {
  EXPECT_EQ(RfaStarSolve(testing::T1(6, 1)).status, SolveStatus::kInfeasible);
  EXPECT_EQ(RfaStarSolve(testing::T1(10, 2)).cost(), 14);
  EXPECT_EQ(RfaStarSolve(testing::T1(6, 2, 2)).cost(), 11);
  SearchOptions noh;
  noh.use_heuristic = false;
  EXPECT_EQ(RfaStarSolve(testing::T1(), noh).cost(), 15);
}

TEST(RfaStar, StartIsGoal) {
  Instance inst = testing::T1();
  inst.goal = kO;
  const SolveResult r = RfaStarSolve(inst);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.cost(), 0);
  EXPECT_TRUE(r.solution->stops.empty());
  EXPECT_EQ(r.stats.labels_expanded, 0);
}

TEST(RfaStar, DisconnectedIsInfeasible) {
  const FuelGraph g({1, 1, 1}, {{0, 1, 1}});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 2, 5, 3, 0};
  EXPECT_EQ(RfaStarSolve(inst).status, SolveStatus::kInfeasible);
}

TEST(RfaStar, RejectsMismatchedReachGraph) {
  const Instance inst = testing::T1();
  const ReachGraph wrong = ComputeReachableSets(inst.g(), 7);
  EXPECT_THROW(RfaStarSolve(inst, wrong), GspError);
}

TEST(RfaStar, ExpiredDeadlineTimesOut) {
  // A long chain keeps OPEN busy for more than one deadline check.
  const int n = 2000;
  std::vector<double> prices(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) prices[i] = 1 + (i * 7919) % 10;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back(Edge{i, i + 1, 1});
    edges.push_back(Edge{i + 1, i, 1});
  }
  const Instance inst{std::make_shared<const FuelGraph>(prices, edges), 0, n - 1, 20, n, 0};
  SearchOptions opts;
  opts.deadline = Clock::now() - std::chrono::seconds(1);
  const SolveResult r = RfaStarSolve(inst, opts);
  EXPECT_EQ(r.status, SolveStatus::kTimeout);
  EXPECT_GT(r.stats.labels_generated, 0);
}

TEST(RfaStarUnbounded, WorkedExampleAndSingleEdge) {
  const Instance inst = testing::T1(6, 1);
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  const SolveResult r = RfaStarSolveUnbounded(inst, reach);
  EXPECT_EQ(r.cost(), 15);
  EXPECT_EQ(ValidateSolution(inst, reach, *r.solution, true), 15);

  const FuelGraph g({3, 1}, {{0, 1, 4}});
  const Instance single{std::make_shared<const FuelGraph>(g), 0, 1, 5, 1, 0};
  EXPECT_EQ(RfaStarSolveUnbounded(single, ComputeReachableSets(g, 5)).cost(), 12);
}

TEST(RfaStarUnbounded, FindsThreeStopRouteWhereOneStopFails) {
  // Chain 0 - 1 - 2 - 3 with hops of 4 on a tank of 5.
  const FuelGraph g({1, 1, 1, 1}, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 3, 5, 1, 0};
  EXPECT_EQ(RfaStarSolve(inst).status, SolveStatus::kInfeasible);
  const SolveResult r = RfaStarSolveUnbounded(inst, ComputeReachableSets(g, 5));
  EXPECT_EQ(r.cost(), 12);
  EXPECT_EQ(r.solution->stops.size(), 3u);
}

TEST(RfaStar, InitialFuelCanSkipTheStartStop) {
  // Two units in the tank reach the cheap vertex for free.
  const FuelGraph g({10, 1, 5}, {{0, 1, 2}, {1, 2, 4}});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 2, 6, 1, 2};
  const SolveResult r = RfaStarSolve(inst);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.cost(), 4);
  ASSERT_EQ(r.solution->stops.size(), 1u);
  EXPECT_EQ(r.solution->stops[0].vertex, 1);
}

TEST(RfaStar, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = testing::SmallRandomInstance(seed);
    const SolveResult a = RfaStarSolve(inst);
    const SolveResult b = RfaStarSolve(inst);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.solution, b.solution);
    EXPECT_EQ(a.stats.labels_generated, b.stats.labels_generated);
    EXPECT_EQ(a.stats.labels_pruned, b.stats.labels_pruned);
  }
}

}  // namespace
}  // namespace gsp
