#include <gtest/gtest.h>

#include "fixtures.h"
#include "gsp/dp.h"
#include "gsp/validate.h"

namespace gsp {
namespace {

using testing::kA;
using testing::kB;
using testing::kO;
using testing::kT;

TEST(GasValues, WorkedExample) {
  const Instance inst = testing::T1();
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  EXPECT_EQ(GasValues(inst, reach, kA), (std::vector<double>{0, 4}));
  EXPECT_EQ(GasValues(inst, reach, kB), (std::vector<double>{0}));
  EXPECT_EQ(GasValues(inst, reach, kT), (std::vector<double>{0}));
}

TEST(GasValues, NoPredecessorsGivesZeroOnly) {
  const FuelGraph g({1, 2, 3}, {{0, 1, 1}});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 1, 4, 1, 0};
  EXPECT_EQ(GasValues(inst, ComputeReachableSets(g, 4), 2), (std::vector<double>{0}));
}

TEST(DpSolve, WorkedExampleCells) {
  const Instance inst = testing::T1();
  const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
  DpTable table(inst, reach);
  const SolveResult r = DpSolve(inst, reach, std::nullopt, &table);
  EXPECT_EQ(table.At(kA, 1, 4), 12);
  EXPECT_EQ(table.At(kB, 1, 0), 10);
  EXPECT_EQ(table.At(kT, 2, 0), 15);
  EXPECT_EQ(table.At(kO, 0, 0), 0);
  EXPECT_EQ(table.At(kA, 1, 3), kInfinity);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.cost(), 15);
  EXPECT_EQ(ValidateSolution(inst, reach, *r.solution), 15);
  EXPECT_GT(r.stats.dp_states_computed, 0);
}

TEST(DpSolve, WorkedExampleVariants) {
  EXPECT_EQ(DpSolve(testing::T1(6, 1)).status, SolveStatus::kInfeasible);
  EXPECT_EQ(DpSolve(testing::T1(10, 2)).cost(), 14);
  EXPECT_EQ(DpSolve(testing::T1(6, 2, 2)).cost(), 11);
  Instance same = testing::T1();
  same.goal = kO;
  EXPECT_EQ(DpSolve(same).cost(), 0);
}

TEST(DpSolve, StateCountWithinGasValueBound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = testing::SmallRandomInstance(seed);
    const ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
    std::int64_t bound = 0;
    for (VertexId v = 0; v < inst.g().num_vertices(); ++v) {
      const auto gv = GasValues(inst, reach, v);
      EXPECT_LE(static_cast<int>(gv.size()), reach.in_degree(v) + 1);
      bound += static_cast<std::int64_t>(gv.size());
    }
    EXPECT_LE(DpSolve(inst, reach).stats.dp_states_computed, inst.k_max * bound);
  }
}

TEST(DpSolve, NonIncreasingInStopLimit) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = testing::SmallRandomInstance(seed);
    double prev = kInfinity;
    for (int k = 1; k <= 5; ++k) {
      inst.k_max = k;
      const double c = DpSolve(inst).cost();
      EXPECT_LE(c, prev);
      prev = c;
    }
  }
}

TEST(DpSolve, ExpiredDeadlineTimesOut) {
  const Instance inst = testing::T1();
  const SolveResult r = DpSolve(inst, ComputeReachableSets(inst.g(), inst.q_max),
                                Clock::now() - std::chrono::seconds(1));
  EXPECT_EQ(r.status, SolveStatus::kTimeout);
}

}  // namespace
}  // namespace gsp
