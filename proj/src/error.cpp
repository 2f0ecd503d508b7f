#include "matchings/error.hpp"

namespace matchings {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotRespectful: return "NotRespectful";
    case ErrorCode::IterationOverflow: return "IterationOverflow";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::RecursionOverflow: return "RecursionOverflow";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::OmegaNotInC: return "OmegaNotInC";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::BadArguments: return "BadArguments";
    case ErrorCode::DuplicateEntries: return "DuplicateEntries";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
  }
  return "Unknown";
}

}  // namespace matchings
