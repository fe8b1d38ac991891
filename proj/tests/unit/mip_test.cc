#include <gtest/gtest.h>

#include "fixtures.h"
#include "gsp/mip.h"
#include "gsp/search.h"
#include "lp_check.h"

namespace gsp {
namespace {

using testing::kB;
using testing::kO;
using testing::kT;

struct T1Model {
  Instance inst = testing::T1();
  ReachGraph reach = ComputeReachableSets(inst.g(), inst.q_max);
};

std::map<std::string, double> OptimalViaB() {
  return {{"x_o_b", 1}, {"x_b_t", 1}, {"a_o", 5}, {"a_b", 5}, {"y_o", 1}, {"y_b", 1}};
}

TEST(BuildMip, WorkedExampleStructure) {
  T1Model t;
  const MipModel m = BuildMip(t.inst, t.reach);
  ASSERT_EQ(t.reach.num_edges(), 8);
  EXPECT_EQ(m.variables.size(), 8u + 4u * 3u);
  // flow 4, conservation 2 * 8, tank 4, indicator 4, stops 1, smart 8
  EXPECT_EQ(m.rows.size(), 4u + 16u + 4u + 4u + 1u + 8u);
  EXPECT_EQ(m.big_m, 6 + 5);
  EXPECT_GE(m.FindVariable("x_o_a"), 0);
  EXPECT_LT(m.FindVariable("x_o_t"), 0);
  EXPECT_EQ(BuildMip(t.inst, t.reach, false).rows.size(), 29u);
}

TEST(BuildMip, StopRowKeptForLargeLimit) {
  T1Model t;
  t.inst.k_max = 10;
  const MipModel m = BuildMip(t.inst, t.reach);
  auto it = std::find_if(m.rows.begin(), m.rows.end(), [](const MipRow& r) { return r.name == "stops"; });
  ASSERT_NE(it, m.rows.end());
  EXPECT_EQ(it->rhs, 10);
}

TEST(CheckAssignment, WorkedExampleOptimum) {
  T1Model t;
  for (bool smart : {true, false}) {
    const AssignmentReport rep = CheckAssignment(BuildMip(t.inst, t.reach, smart), OptimalViaB());
    EXPECT_TRUE(rep.feasible()) << rep.violations.front().row;
    EXPECT_EQ(rep.objective, 15);
  }
}

TEST(CheckAssignment, AllZerosViolatesEndpointFlow) {
  T1Model t;
  const AssignmentReport rep = CheckAssignment(BuildMip(t.inst, t.reach), {});
  std::set<std::string> rows;
  for (const auto& v : rep.violations) rows.insert(v.row);
  EXPECT_TRUE(rows.count("flow_o"));
  EXPECT_TRUE(rows.count("flow_t"));
  EXPECT_FALSE(rows.count("flow_a"));
}

TEST(CheckAssignment, ReportsBoundsIntegralityAndUnknownNames) {
  T1Model t;
  auto a = OptimalViaB();
  a["x_o_a"] = 0.5;
  a["bogus"] = 1;
  const AssignmentReport rep = CheckAssignment(BuildMip(t.inst, t.reach), a);
  std::set<std::string> rows;
  for (const auto& v : rep.violations) rows.insert(v.row);
  EXPECT_TRUE(rows.count("integrality:x_o_a"));
  EXPECT_TRUE(rows.count("unknown:bogus"));
}

TEST(CheckAssignment, SmartRefuelRejectsUnderfilling) {
  // Route via a requires filling up at o (a is pricier); buying only 2 there
  // and 5 at a satisfies the plain model but not the cut.
  T1Model t;
  const std::map<std::string, double> a{{"x_o_a", 1}, {"x_a_t", 1}, {"a_o", 2},
                                        {"a_a", 5},   {"y_o", 1},   {"y_a", 1}};
  EXPECT_TRUE(CheckAssignment(BuildMip(t.inst, t.reach, false), a).feasible());
  EXPECT_FALSE(CheckAssignment(BuildMip(t.inst, t.reach, true), a).feasible());
}

TEST(SolutionToAssignment, SolverOptimumSatisfiesModel) {
  T1Model t;
  const MipModel m = BuildMip(t.inst, t.reach);
  const SolveResult r = RfaStarSolve(t.inst, t.reach);
  const AssignmentReport rep = CheckAssignment(m, SolutionToAssignment(m, t.inst, *r.solution));
  EXPECT_TRUE(rep.feasible());
  EXPECT_EQ(rep.objective, 15);
}

TEST(WriteLp, WorkedExampleText) {
  T1Model t;
  const std::string lp = WriteLp(BuildMip(t.inst, t.reach));
  EXPECT_NE(lp.find("Minimize\n"), std::string::npos);
  EXPECT_NE(lp.find("2 a_o + 3 a_a + 1 a_b"), std::string::npos);
  EXPECT_NE(lp.find("big-M"), std::string::npos);
  EXPECT_NE(lp.find(" q_o = 0\n"), std::string::npos);
  EXPECT_NE(lp.find("End\n"), std::string::npos);
  EXPECT_EQ(lp, WriteLp(BuildMip(t.inst, t.reach)));
  const auto errors = testing::CheckLpGrammar(lp);
  EXPECT_TRUE(errors.empty()) << errors.front();
}

TEST(WriteLp, EmptyEdgeModelIsValid) {
  const FuelGraph g({1, 2, 3}, {});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 1, 5, 1, 0};
  const MipModel m = BuildMip(inst, ComputeReachableSets(g, 5));
  EXPECT_FALSE(m.warnings.empty());
  // Flow rows only for start and goal.
  EXPECT_EQ(std::count_if(m.rows.begin(), m.rows.end(),
                          [](const MipRow& r) { return r.name.rfind("flow_", 0) == 0; }),
            2);
  const auto errors = testing::CheckLpGrammar(WriteLp(m));
  EXPECT_TRUE(errors.empty()) << errors.front();
}

TEST(WriteLp, NamesFallBackToIndicesOnCollision) {
  // "a_b" + "c" and "a" + "b_c" would both give x_a_b_c.
  const FuelGraph g({1, 1, 1, 1}, {{0, 1, 1}, {2, 3, 1}}, {"a_b", "c", "a", "b_c"});
  const Instance inst{std::make_shared<const FuelGraph>(g), 0, 1, 5, 1, 0};
  const MipModel m = BuildMip(inst, ComputeReachableSets(g, 5));
  EXPECT_GE(m.FindVariable("x_v0_v1"), 0);
  const FuelGraph h({1, 1}, {{0, 1, 1}}, {"s-1", "t.2"});
  const Instance hi{std::make_shared<const FuelGraph>(h), 0, 1, 5, 1, 0};
  EXPECT_GE(BuildMip(hi, ComputeReachableSets(h, 5)).FindVariable("x_s_1_t_2"), 0);
}

TEST(LpGrammar, RejectsBrokenText) {
  EXPECT_FALSE(testing::CheckLpGrammar("Minimize\n obj: 2 a\nSubject To\n c1: 1 a >=\nEnd\n").empty());
  EXPECT_FALSE(testing::CheckLpGrammar("Subject To\nMinimize\n obj: 1 a\nEnd\n").empty());
  EXPECT_FALSE(testing::CheckLpGrammar("Minimize\n obj: 1 a 2 b\nEnd\n").empty());
  EXPECT_TRUE(testing::CheckLpGrammar("Minimize\n obj: 1 a - 2 b\nSubject To\n c: 1 a\n   + 1 b <= 3\n"
                                      "Bounds\n 0 <= a <= 4\nBinary\n b\nEnd\n")
                  .empty());
}

}  // namespace
}  // namespace gsp
