#ifndef GSP_TRANSFORM_H_
#define GSP_TRANSFORM_H_

#include "gsp/types.h"

namespace gsp {

// Turns an instance with q0 in (0, q_max) into an empty-tank one: a new
// vertex p (id n, price 0) with a single arc p -> start of fuel q_max - q0
// becomes the start, q0 drops to 0 and k_max grows by one for the free stop
// at p. Filling up at p delivers exactly q0 at the old start.
// Throws kTransformInapplicable when q0 == 0 or q0 == q_max.
Instance ApplyInitialFuelTransform(const Instance& inst);

}  // namespace gsp

#endif  // GSP_TRANSFORM_H_
