#ifndef GSP_ERROR_H_
#define GSP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsp {

enum class ErrorCode {
  kInvalidInstance,
  kVertexMismatch,
  kTankExceeded,
  kFuelNegative,
  kTooManyStops,
  kBadEndpoints,
  kHopNotReachable,
  kParseError,
  kSchemaError,
  kNonIntegralInput,
  kInstanceTooLarge,
  kTransformInapplicable,
  kGenerationFailed,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. Infeasible
// instances and timeouts are results, not errors.
class GspError : public std::runtime_error {
 public:
  GspError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gsp

#endif  // GSP_ERROR_H_
