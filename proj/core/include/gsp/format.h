#ifndef GSP_FORMAT_H_
#define GSP_FORMAT_H_

#include <string>

namespace gsp {

// Shortest decimal text that round-trips to the same double ("15", "0.1",
// "inf"). Used by every text writer so output is byte-stable.
std::string FormatNumber(double value);

}  // namespace gsp

#endif  // GSP_FORMAT_H_
