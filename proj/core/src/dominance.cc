#include "gsp/dominance.h"

#include <string>

#include "gsp/error.h"

namespace gsp {

namespace {

void RequireSameVertex(const Label& a, const Label& b) {
  if (a.v != b.v) {
    throw GspError(ErrorCode::kVertexMismatch,
                   "labels at vertices " + std::to_string(a.v) + " and " +
                       std::to_string(b.v) + " are not comparable");
  }
}

}  // namespace

bool Dominates(const Label& l, const Label& other) {
  RequireSameVertex(l, other);
  return l.g <= other.g && l.q >= other.q && l.k <= other.k;
}

bool ScalarizedDominates(const Label& dominator, const Label& candidate, double price) {
  RequireSameVertex(dominator, candidate);
  if (price == kNonRefuellable) return Dominates(dominator, candidate);
  return dominator.g + (candidate.q - dominator.q) * price <= candidate.g;
}

}  // namespace gsp
