#ifndef GSP_DOMINANCE_H_
#define GSP_DOMINANCE_H_

#include "gsp/types.h"

namespace gsp {

// Weak label dominance at a shared vertex: `l` dominates `other` when it is no
// more expensive, holds no less fuel, and has used no more stops. Equal labels
// dominate each other. Throws GspError(kVertexMismatch) if the vertices differ.
bool Dominates(const Label& l, const Label& other);

// Dominance used when the stop count is unbounded. `dominator` prunes
// `candidate` when dominator's cost plus buying the fuel difference at
// `price` is no worse:
//
//   g(dominator) + (q(candidate) - q(dominator)) * price <= g(candidate)
//
// Stop counts are ignored. A non-refuellable `price` falls back to
// Dominates(dominator, candidate).
bool ScalarizedDominates(const Label& dominator, const Label& candidate, double price);

}  // namespace gsp

#endif  // GSP_DOMINANCE_H_
