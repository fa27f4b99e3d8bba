#ifndef CENSURV_ERROR_HPP
#define CENSURV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace censurv {

enum class ErrorCode {
  none = 0,
  no_events,
  no_nonevents,
  insufficient_data,
  bad_index,
  bad_argument,
  dimension_mismatch,
  length_mismatch,
  too_few,
  not_converged,
  singular_information,
  format_error,
  unknown_variant,
  io_error,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace censurv

#endif
