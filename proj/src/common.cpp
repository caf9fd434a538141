#include "imw/common.hpp"

#include <sstream>

namespace imw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotIdentity: return "NotIdentity";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NonUniqueInverse: return "NonUniqueInverse";
    case ErrorCode::IdempotentsDoNotCommute: return "IdempotentsDoNotCommute";
    case ErrorCode::NotASemilattice: return "NotASemilattice";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::OrderAxiomViolation: return "OrderAxiomViolation";
    case ErrorCode::InternalCharacterizationFailure:
      return "InternalCharacterizationFailure";
    case ErrorCode::EquivalenceMismatch: return "EquivalenceMismatch";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::ConditionViolation: return "ConditionViolation";
    case ErrorCode::IdentityNotTop: return "IdentityNotTop";
    case ErrorCode::IllDefinedMultiplication: return "IllDefinedMultiplication";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoActionWitness: return "NoActionWitness";
    case ErrorCode::NoChiWitness: return "NoChiWitness";
    case ErrorCode::IsoNotFound: return "IsoNotFound";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotInverse: return "NotInverse";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InverseMismatch: return "InverseMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<Elem> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

void fail(ErrorCode code, std::string message, std::vector<Elem> witness) {
  throw Error(code, std::move(message), std::move(witness));
}

std::string join(const std::vector<Elem>& xs, std::string_view sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out << sep;
    out << xs[i];
  }
  return out.str();
}

}  // namespace imw
