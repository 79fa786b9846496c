#include "sympal/error.hpp"

namespace sympal {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime:
      return "NotPrime";
    case Errc::ZeroArgument:
      return "ZeroArgument";
    case Errc::NotGenerator:
      return "NotGenerator";
    case Errc::NoEmbedding:
      return "NoEmbedding";
    case Errc::FieldTooLarge:
      return "FieldTooLarge";
    case Errc::MixedField:
      return "MixedField";
    case Errc::Singular:
      return "Singular";
    case Errc::NotSimilitude:
      return "NotSimilitude";
    case Errc::DimensionMismatch:
      return "DimensionMismatch";
    case Errc::CapExceeded:
      return "CapExceeded";
    case Errc::Unverified:
      return "Unverified";
    case Errc::NoTransvection:
      return "NoTransvection";
    case Errc::CharTooSmall:
      return "CharTooSmall";
    case Errc::WitnessCheckFailed:
      return "WitnessCheckFailed";
    case Errc::NoOrderMatch:
      return "NoOrderMatch";
    case Errc::InvalidParams:
      return "InvalidParams";
    case Errc::NoInvariantForm:
      return "NoInvariantForm";
    case Errc::NotIrreducible:
      return "NotIrreducible";
    case Errc::InvalidProfile:
      return "InvalidProfile";
    case Errc::TwistBreaksRegularity:
      return "TwistBreaksRegularity";
    case Errc::NotSubgroup:
      return "NotSubgroup";
    case Errc::HypothesisFailed:
      return "HypothesisFailed";
    case Errc::Parse:
      return "Parse";
  }
  return "Unknown";
}

}  // namespace sympal
