#include "semitrace/error.hpp"

namespace semitrace {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::RegularRing: return "RegularRing";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace semitrace
