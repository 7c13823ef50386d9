#include "germoid/error.hpp"

namespace germoid {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoUniqueInverse: return "NoUniqueInverse";
    case Errc::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
    case Errc::NoZero: return "NoZero";
    case Errc::NotEUnitary: return "NotEUnitary";
    case Errc::SigmaMismatch: return "SigmaMismatch";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::ImproperIdeal: return "ImproperIdeal";
    case Errc::NotAPartialHom: return "NotAPartialHom";
    case Errc::NotIdempotentPure: return "NotIdempotentPure";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::ActionNotByAutomorphisms: return "ActionNotByAutomorphisms";
    case Errc::ContractedWithoutZero: return "ContractedWithoutZero";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NotADownset: return "NotADownset";
    case Errc::NotMeetPreserving: return "NotMeetPreserving";
    case Errc::NotAFilter: return "NotAFilter";
    case Errc::CompositionNotAssociative: return "CompositionNotAssociative";
    case Errc::MissingIdentity: return "MissingIdentity";
    case Errc::MissingInverse: return "MissingInverse";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::UnknownUnit: return "UnknownUnit";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::NotAFunctor: return "NotAFunctor";
    case Errc::NotFaithful: return "NotFaithful";
    case Errc::NotBijective: return "NotBijective";
    case Errc::WrongGroupoid: return "WrongGroupoid";
    case Errc::DomainsDontCover: return "DomainsDontCover";
    case Errc::IdentityNotTotal: return "IdentityNotTotal";
    case Errc::NotDualPrehom: return "NotDualPrehom";
    case Errc::InverseMismatch: return "InverseMismatch";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotLocallyIdempotentPure: return "NotLocallyIdempotentPure";
    case Errc::FaithfulnessFailed: return "FaithfulnessFailed";
    case Errc::VariantUnavailable: return "VariantUnavailable";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace germoid
