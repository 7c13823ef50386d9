#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace germoid {

/// Structured failure kinds. Every constructor in the library either returns a
/// fully validated value or throws an Error carrying one of these codes.
enum class Errc {
  InvalidParams,
  SizeLimitExceeded,
  ParseError,
  // inverse semigroups
  NotAssociative,
  NoUniqueInverse,
  ZeroNotAbsorbing,
  NoZero,
  NotEUnitary,
  SigmaMismatch,
  NotAnIdeal,
  ImproperIdeal,
  NotAPartialHom,
  NotIdempotentPure,
  NotAHomomorphism,
  ActionNotByAutomorphisms,
  // semilattices and filters
  ContractedWithoutZero,
  UnknownElement,
  NotADownset,
  NotMeetPreserving,
  NotAFilter,
  // groupoids
  CompositionNotAssociative,
  MissingIdentity,
  MissingInverse,
  DomainMismatch,
  UnknownUnit,
  InvalidAction,
  NotAFunctor,
  NotFaithful,
  NotBijective,
  WrongGroupoid,
  // actions
  DomainsDontCover,
  IdentityNotTotal,
  NotDualPrehom,
  InverseMismatch,
  NotInvariant,
  // pipeline
  NotLocallyIdempotentPure,
  FaithfulnessFailed,
  VariantUnavailable,
  InternalInvariant,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::size_t> witness = {});

  Errc code() const noexcept { return code_; }
  /// Element, arrow or point ids that exhibit the failure.
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<std::size_t> witness_;
};

}  // namespace germoid
