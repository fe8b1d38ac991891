#ifndef GSP_MIP_H_
#define GSP_MIP_H_

#include <map>
#include <string>
#include <vector>

#include "gsp/reach_graph.h"
#include "gsp/types.h"

namespace gsp {

enum class VarType { kBinary, kContinuous };
enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct MipVariable {
  std::string name;
  VarType type = VarType::kContinuous;
  double lower = 0.0;
  double upper = kInfinity;
};

struct MipTerm {
  int var = 0;
  double coef = 0.0;
};

struct MipRow {
  std::string name;
  std::vector<MipTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

// Mixed-integer model over the refuel-graph arcs:
//   x_u_v  binary, arc (u, v) is on the path
//   y_u    binary, a purchase happens at u
//   a_u    continuous, amount bought at u (fixed to 0 where fuel is not sold)
//   q_u    continuous, fuel on arrival at u (fixed to q0 at the start)
// minimizing sum price(u) * a_u. The bilinear conservation
// (q_u + a_u - d - q_v) * x_uv = 0 is written as two big-M rows.
struct MipModel {
  std::vector<MipVariable> variables;
  std::vector<MipRow> rows;
  std::vector<MipTerm> objective;
  double big_m = 0.0;
  // Emitted as LP comment lines.
  std::vector<std::string> comments;
  std::vector<std::string> warnings;
  // LP-safe name fragment per vertex, used in every variable name.
  std::vector<std::string> vertex_tokens;

  int FindVariable(const std::string& name) const;

 private:
  friend MipModel BuildMip(const Instance&, const ReachGraph&, bool);
  std::map<std::string, int> index_;
};

// Rows, in order:
//   flow_u     out - in = [u == start] - [u == goal] (omitted for vertices
//              with no refuel-graph arc, unless start or goal)
//   cons_hi_u_v, cons_lo_u_v   big-M conservation along used arcs
//   tank_u     q_u + a_u <= q_max
//   ind_u      a_u <= q_max * y_u
//   stops      sum y_u <= k_max
//   smart_u_v  (optional) along a used arc: fill the tank when the next
//              vertex is pricier, else cover the hop; arcs into the goal
//              always take the cover-the-hop form, and arcs out of the start
//              get no cut when q0 > 0.
// M = q_max + max refuel-graph arc fuel.
MipModel BuildMip(const Instance& inst, const ReachGraph& reach, bool include_smart_refuel = true);

// CPLEX LP text. Deterministic for identical models.
std::string WriteLp(const MipModel& model);

struct RowViolation {
  std::string row;
  // Signed amount by which the row misses: lhs - rhs for <=, rhs - lhs for >=,
  // |lhs - rhs| for =. Always > tolerance.
  double violation = 0.0;
};

struct AssignmentReport {
  std::vector<RowViolation> violations;
  double objective = 0.0;

  bool feasible() const { return violations.empty(); }
};

// Evaluates every row, variable bound and integrality requirement. Missing
// variables read as 0; unknown names in the assignment are reported as
// violations named "unknown:<name>".
AssignmentReport CheckAssignment(const MipModel& model,
                                 const std::map<std::string, double>& assignment,
                                 double tolerance = 0.0);

// Variable values encoding `sol` in `model` (built for the same instance).
std::map<std::string, double> SolutionToAssignment(const MipModel& model, const Instance& inst,
                                                   const Solution& sol);

}  // namespace gsp

#endif  // GSP_MIP_H_
