#include "gsp/mip.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "gsp/format.h"

namespace gsp {

namespace {

std::string Sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? "_" : out;
}

std::vector<std::string> VertexTokens(const FuelGraph& graph, bool use_names) {
  std::vector<std::string> tokens;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    tokens.push_back(use_names ? Sanitize(graph.name(v)) : "v" + std::to_string(v));
  }
  return tokens;
}

// Variable names must be unique; underscores inside vertex names can make
// x_<u>_<v> ambiguous, in which case indices are used instead.
bool NamesUnique(const FuelGraph& graph, const ReachGraph& reach,
                 const std::vector<std::string>& tokens) {
  std::set<std::string> seen;
  auto add = [&](const std::string& s) { return seen.insert(s).second; };
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    if (!add("y_" + tokens[u]) || !add("a_" + tokens[u]) || !add("q_" + tokens[u])) return false;
    for (const ReachEntry& e : reach.reachable(u)) {
      if (!add("x_" + tokens[u] + "_" + tokens[e.vertex])) return false;
    }
  }
  return true;
}

const char* SenseText(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual: return "<=";
    case RowSense::kGreaterEqual: return ">=";
    case RowSense::kEqual: return "=";
  }
  return "=";
}

// Writes " name: terms" with wrapping so no line exceeds ~200 characters.
void WriteExpression(std::ostringstream& out, const std::string& label,
                     const std::vector<MipTerm>& terms, const MipModel& model) {
  std::string line = " " + label + ":";
  auto flush_if_long = [&](std::size_t next) {
    if (line.size() + next > 200) {
      out << line << '\n';
      line = "   ";
    }
  };
  if (terms.empty()) {
    line += " 0 " + model.variables.front().name;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const MipTerm& t = terms[i];
    std::string piece;
    if (i == 0) {
      piece = " " + FormatNumber(t.coef) + " " + model.variables[t.var].name;
    } else {
      piece = std::string(t.coef < 0 ? " - " : " + ") + FormatNumber(std::fabs(t.coef)) + " " +
              model.variables[t.var].name;
    }
    flush_if_long(piece.size());
    line += piece;
  }
  out << line;
}

}  // namespace

int MipModel::FindVariable(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

MipModel BuildMip(const Instance& inst, const ReachGraph& reach, bool include_smart_refuel) {
  inst.Validate();
  const FuelGraph& graph = inst.g();
  const int n = graph.num_vertices();
  MipModel model;

  model.vertex_tokens = VertexTokens(graph, true);
  if (!NamesUnique(graph, reach, model.vertex_tokens)) {
    model.vertex_tokens = VertexTokens(graph, false);
  }
  const auto& tok = model.vertex_tokens;

  double max_arc = 0.0;
  for (VertexId u = 0; u < n; ++u) {
    for (const ReachEntry& e : reach.reachable(u)) max_arc = std::max(max_arc, e.fuel);
  }
  model.big_m = inst.q_max + max_arc;
  const double m = model.big_m;

  auto add_var = [&](std::string name, VarType type, double lo, double hi) {
    model.index_[name] = static_cast<int>(model.variables.size());
    model.variables.push_back(MipVariable{std::move(name), type, lo, hi});
    return static_cast<int>(model.variables.size() - 1);
  };

  std::vector<int> y(n), a(n), q(n);
  for (VertexId u = 0; u < n; ++u) {
    y[u] = add_var("y_" + tok[u], VarType::kBinary, 0.0, 1.0);
    const double a_hi = graph.refuellable(u) ? kInfinity : 0.0;
    a[u] = add_var("a_" + tok[u], VarType::kContinuous, 0.0, a_hi);
    const double q_fixed = u == inst.start ? inst.q0 : -1.0;
    q[u] = q_fixed >= 0.0 ? add_var("q_" + tok[u], VarType::kContinuous, q_fixed, q_fixed)
                          : add_var("q_" + tok[u], VarType::kContinuous, 0.0, kInfinity);
  }
  struct ArcVar {
    VertexId u, v;
    double fuel;
    int x;
  };
  std::vector<ArcVar> arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (const ReachEntry& e : reach.reachable(u)) {
      arcs.push_back(ArcVar{u, e.vertex, e.fuel,
                            add_var("x_" + tok[u] + "_" + tok[e.vertex], VarType::kBinary, 0.0, 1.0)});
    }
  }

  for (VertexId u = 0; u < n; ++u) {
    if (graph.refuellable(u)) model.objective.push_back(MipTerm{a[u], graph.price(u)});
  }

  // Flow conservation.
  std::vector<std::vector<MipTerm>> flow(n);
  for (const ArcVar& arc : arcs) flow[arc.u].push_back(MipTerm{arc.x, 1.0});
  for (const ArcVar& arc : arcs) flow[arc.v].push_back(MipTerm{arc.x, -1.0});
  for (VertexId u = 0; u < n; ++u) {
    const double rhs = (u == inst.start ? 1.0 : 0.0) - (u == inst.goal ? 1.0 : 0.0);
    if (flow[u].empty() && u != inst.start && u != inst.goal) continue;
    model.rows.push_back(MipRow{"flow_" + tok[u], flow[u], RowSense::kEqual, rhs});
  }

  // q_u + a_u - d - q_v within +-M(1 - x_uv) of zero.
  for (const ArcVar& arc : arcs) {
    const std::string suffix = tok[arc.u] + "_" + tok[arc.v];
    model.rows.push_back(MipRow{"cons_hi_" + suffix,
                                {{q[arc.u], 1.0}, {a[arc.u], 1.0}, {q[arc.v], -1.0}, {arc.x, m}},
                                RowSense::kLessEqual, m + arc.fuel});
    model.rows.push_back(MipRow{"cons_lo_" + suffix,
                                {{q[arc.u], 1.0}, {a[arc.u], 1.0}, {q[arc.v], -1.0}, {arc.x, -m}},
                                RowSense::kGreaterEqual, arc.fuel - m});
  }

  for (VertexId u = 0; u < n; ++u) {
    model.rows.push_back(
        MipRow{"tank_" + tok[u], {{q[u], 1.0}, {a[u], 1.0}}, RowSense::kLessEqual, inst.q_max});
  }
  // Only a > 0 => y = 1 is encoded; y appears nowhere but the stop row.
  for (VertexId u = 0; u < n; ++u) {
    model.rows.push_back(
        MipRow{"ind_" + tok[u], {{a[u], 1.0}, {y[u], -inst.q_max}}, RowSense::kLessEqual, 0.0});
  }
  {
    MipRow stops{"stops", {}, RowSense::kLessEqual, static_cast<double>(inst.k_max)};
    for (VertexId u = 0; u < n; ++u) stops.terms.push_back(MipTerm{y[u], 1.0});
    model.rows.push_back(std::move(stops));
  }

  if (include_smart_refuel) {
    for (const ArcVar& arc : arcs) {
      if (arc.u == inst.start && inst.q0 > 0.0) continue;
      const std::string name = "smart_" + tok[arc.u] + "_" + tok[arc.v];
      const bool fill_up = arc.v != inst.goal && graph.price(arc.u) < graph.price(arc.v);
      // fill up:   a_u >= q_max - q_u - M(1 - x)
      // otherwise: a_u + q_u >= d - M(1 - x)
      const double target = fill_up ? inst.q_max : arc.fuel;
      model.rows.push_back(MipRow{name, {{a[arc.u], 1.0}, {q[arc.u], 1.0}, {arc.x, -m}},
                                  RowSense::kGreaterEqual, target - m});
    }
  }

  bool any_stop = false;
  for (const ArcVar& arc : arcs) any_stop = any_stop || graph.refuellable(arc.u);
  if (!any_stop && inst.start != inst.goal) {
    model.warnings.push_back("NonRefuellableOnAllRoutes: no vertex with an outgoing arc sells fuel");
  }

  model.comments.push_back("gas station problem: start " + tok[inst.start] + ", goal " +
                           tok[inst.goal] + ", q_max " + FormatNumber(inst.q_max) + ", k_max " +
                           std::to_string(inst.k_max) + ", q0 " + FormatNumber(inst.q0));
  model.comments.push_back("big-M = q_max + max arc fuel = " + FormatNumber(m));
  model.comments.push_back(include_smart_refuel ? "smart-refuel cuts: on" : "smart-refuel cuts: off");
  for (const std::string& w : model.warnings) model.comments.push_back("warning: " + w);
  return model;
}

std::string WriteLp(const MipModel& model) {
  std::ostringstream out;
  for (const std::string& c : model.comments) out << "\\ " << c << '\n';
  out << "Minimize\n";
  WriteExpression(out, "obj", model.objective, model);
  out << "\nSubject To\n";
  for (const MipRow& row : model.rows) {
    WriteExpression(out, row.name, row.terms, model);
    out << ' ' << SenseText(row.sense) << ' ' << FormatNumber(row.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const MipVariable& v : model.variables) {
    if (v.type != VarType::kContinuous) continue;
    if (v.lower == v.upper) {
      out << ' ' << v.name << " = " << FormatNumber(v.lower) << '\n';
    } else if (v.lower != 0.0 || v.upper != kInfinity) {
      out << ' ' << FormatNumber(v.lower) << " <= " << v.name << " <= " << FormatNumber(v.upper)
          << '\n';
    }
  }
  out << "Binary\n";
  for (const MipVariable& v : model.variables) {
    if (v.type == VarType::kBinary) out << ' ' << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

AssignmentReport CheckAssignment(const MipModel& model,
                                 const std::map<std::string, double>& assignment,
                                 double tolerance) {
  AssignmentReport report;
  std::vector<double> values(model.variables.size(), 0.0);
  for (const auto& [name, value] : assignment) {
    const int idx = model.FindVariable(name);
    if (idx < 0) {
      report.violations.push_back(RowViolation{"unknown:" + name, std::fabs(value)});
      continue;
    }
    values[idx] = value;
  }
  for (std::size_t i = 0; i < model.variables.size(); ++i) {
    const MipVariable& v = model.variables[i];
    const double x = values[i];
    if (x < v.lower - tolerance) {
      report.violations.push_back(RowViolation{"bound:" + v.name, v.lower - x});
    } else if (x > v.upper + tolerance) {
      report.violations.push_back(RowViolation{"bound:" + v.name, x - v.upper});
    }
    if (v.type == VarType::kBinary && x != 0.0 && x != 1.0) {
      report.violations.push_back(
          RowViolation{"integrality:" + v.name, std::min(std::fabs(x), std::fabs(x - 1.0))});
    }
  }
  for (const MipRow& row : model.rows) {
    double lhs = 0.0;
    for (const MipTerm& t : row.terms) lhs += t.coef * values[t.var];
    double miss = 0.0;
    switch (row.sense) {
      case RowSense::kLessEqual: miss = lhs - row.rhs; break;
      case RowSense::kGreaterEqual: miss = row.rhs - lhs; break;
      case RowSense::kEqual: miss = std::fabs(lhs - row.rhs); break;
    }
    if (miss > tolerance) report.violations.push_back(RowViolation{row.name, miss});
  }
  for (const MipTerm& t : model.objective) report.objective += t.coef * values[t.var];
  return report;
}

std::map<std::string, double> SolutionToAssignment(const MipModel& model, const Instance& inst,
                                                   const Solution& sol) {
  const FuelGraph& graph = inst.g();
  const auto& tok = model.vertex_tokens;
  std::map<std::string, double> values;
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    values["y_" + tok[u]] = 0.0;
    values["a_" + tok[u]] = 0.0;
    values["q_" + tok[u]] = 0.0;
  }
  values["q_" + tok[inst.start]] = inst.q0;
  for (std::size_t i = 0; i < sol.route.size(); ++i) {
    const Hop& hop = sol.route[i];
    if (i > 0) {
      values["x_" + tok[sol.route[i - 1].vertex] + "_" + tok[hop.vertex]] = 1.0;
      values["q_" + tok[hop.vertex]] = sol.arrival_fuel[i];
    }
    if (hop.refuel > 0.0) {
      values["a_" + tok[hop.vertex]] += hop.refuel;
      values["y_" + tok[hop.vertex]] = 1.0;
    }
  }
  return values;
}

}  // namespace gsp
