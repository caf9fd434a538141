#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imw {

/// Elements of a finite structure are dense 0-based indices.
using Elem = std::uint32_t;

enum class ErrorCode {
  // core-algebra
  IndexOutOfRange,
  BadShape,
  NotAssociative,
  NotIdentity,
  NotACongruence,
  // inverse-structure
  NoInverse,
  NonUniqueInverse,
  IdempotentsDoNotCommute,
  NotASemilattice,
  NotAGroup,
  OrderAxiomViolation,
  InternalCharacterizationFailure,
  EquivalenceMismatch,
  // extension-engine
  NotAnExtension,
  // constructions
  AxiomViolation,
  ConditionViolation,
  IdentityNotTop,
  IllDefinedMultiplication,
  PreconditionFailed,
  NoActionWitness,
  NoChiWitness,
  IsoNotFound,
  // isomorphism
  NotHomomorphism,
  NotInverse,
  SizeLimitExceeded,
  // corpus-enumeration
  BoundExceeded,
  BudgetExceeded,
  // cli-io
  SyntaxError,
  InverseMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure carries a machine-readable code and the witness indices
/// that triggered it (triple for associativity, pair for homomorphism, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<Elem> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Elem> witness_;
};

[[noreturn]] void fail(ErrorCode code, std::string message,
                       std::vector<Elem> witness = {});

std::string join(const std::vector<Elem>& xs, std::string_view sep = ",");

}  // namespace imw
