#include <gtest/gtest.h>

#include "fixtures.h"
#include "gsp/error.h"
#include "gsp/oracle.h"
#include "gsp/validate.h"

namespace gsp {
namespace {

using testing::kA;
using testing::kB;
using testing::kO;
using testing::kT;

TEST(RouteMinCost, WorkedExampleRoutes) {
  const Instance inst = testing::T1();
  const auto via_b = RouteMinCost(Route{{kO, kB, kT}, {5, 5}}, inst);
  ASSERT_TRUE(via_b);
  EXPECT_EQ(via_b->cost, 15);
  EXPECT_EQ(via_b->amounts, (std::vector<double>{5, 5, 0}));
  const auto via_a = RouteMinCost(Route{{kO, kA, kT}, {2, 5}}, inst);
  ASSERT_TRUE(via_a);
  EXPECT_EQ(via_a->cost, 15);
  EXPECT_EQ(via_a->amounts, (std::vector<double>{6, 1, 0}));
}

TEST(RouteMinCost, HopBeyondTankIsInfeasible) {
  EXPECT_FALSE(RouteMinCost(Route{{kO, kT}, {7}}, testing::T1()));
}

TEST(RouteMinCost, StopLimit) {
  const Instance inst = testing::T1();
  EXPECT_FALSE(RouteMinCost(Route{{kO, kB, kT}, {5, 5}}, inst, 1));
}

TEST(RouteMinCost, FractionalDataRejected) {
  try {
    RouteMinCost(Route{{kO, kA}, {2.5}}, testing::T1());
    FAIL();
  } catch (const GspError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegralInput);
  }
}

TEST(BruteForce, WorkedExample) {
  const Instance inst = testing::T1();
  const SolveResult r = BruteForceSolve(inst);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.cost(), 15);
  EXPECT_EQ(ValidateSolution(inst, *r.solution), 15);
  EXPECT_EQ(BruteForceSolve(testing::T1(6, 1)).status, SolveStatus::kInfeasible);
}

// Frozen from the first oracle run (also reproduced by a separate script).
TEST(BruteForce, FrozenRegressionValues) {
  EXPECT_EQ(BruteForceSolve(testing::T1(10, 2)).cost(), 14);
  EXPECT_EQ(BruteForceSolve(testing::T1(6, 2, 2)).cost(), 11);
}

TEST(BruteForce, DisconnectedIsInfeasible) {
  const FuelGraph g({1, 1, 1}, {{0, 1, 1}});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 2, 5, 2, 0};
  EXPECT_EQ(BruteForceSolve(inst).status, SolveStatus::kInfeasible);
}

TEST(BruteForce, Guards) {
  Instance big = testing::T1();
  big.k_max = 6;
  try {
    BruteForceSolve(big);
    FAIL();
  } catch (const GspError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
  Instance frac = testing::T1(6.5, 2);
  try {
    BruteForceSolve(frac);
    FAIL();
  } catch (const GspError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegralInput);
  }
}

TEST(BruteForce, EnumeratesWalksUpToDepth) {
  const Instance inst = testing::T1();
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  std::vector<Route> routes;
  BruteForceSolve(inst, reach, [&](const Route& r, const std::optional<double>&) {
    routes.push_back(r);
  });
  // o-a-t and o-b-t only; anything longer needs three hops.
  ASSERT_EQ(routes.size(), 2u);
  Instance deeper = testing::T1(6, 4);
  // Revisits count: o-a-o-b-t, o-b-o-a-t, o-a-o-a-t, ...
  EXPECT_GT(CountOracleRoutes(deeper, reach), 2);
}

}  // namespace
}  // namespace gsp
