#include "envelope/error.hpp"

namespace envelope {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::MalformedCycleNotation: return "MalformedCycleNotation";
    case ErrorCode::IndexNotSuccessor: return "IndexNotSuccessor";
    case ErrorCode::OrdinalOutOfRange: return "OrdinalOutOfRange";
    case ErrorCode::NotYetStable: return "NotYetStable";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace envelope
