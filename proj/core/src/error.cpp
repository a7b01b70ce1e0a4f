#include "orbikt/error.hpp"

#include "orbikt/numeric.hpp"

namespace orbikt {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotOpen: return "NotOpen";
    case ErrorKind::NonConstantStabilizer: return "NonConstantStabilizer";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_refusal(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotIsolated:
    case ErrorKind::NotApplicable:
    case ErrorKind::NotOpen:
    case ErrorKind::NotAdmissible:
    case ErrorKind::NotRegular:
    case ErrorKind::NonConstantStabilizer:
      return true;
    default:
      return false;
  }
}

namespace modp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace modp

}  // namespace orbikt
