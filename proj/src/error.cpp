#include "censurv/error.hpp"

namespace censurv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::none: return "Ok";
    case ErrorCode::no_events: return "NoEvents";
    case ErrorCode::no_nonevents: return "NoNonEvents";
    case ErrorCode::insufficient_data: return "InsufficientData";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::bad_argument: return "BadArgument";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::too_few: return "TooFew";
    case ErrorCode::not_converged: return "NotConverged";
    case ErrorCode::singular_information: return "SingularInformation";
    case ErrorCode::format_error: return "FormatError";
    case ErrorCode::unknown_variant: return "UnknownVariant";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace censurv
