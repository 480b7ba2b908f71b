#include "markov/error.hpp"

namespace markov {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidTriplet: return "InvalidTriplet";
    case Errc::SingularTriplet: return "SingularTriplet";
    case Errc::NotSingular: return "NotSingular";
    case Errc::RootTriplet: return "RootTriplet";
    case Errc::NotFound: return "NotFound";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::WrongSideForSingular: return "WrongSideForSingular";
    case Errc::NonIntegralStep: return "NonIntegralStep";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::InvalidParity: return "InvalidParity";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::NonIntegralSolution: return "NonIntegralSolution";
    case Errc::DecompositionMismatch: return "DecompositionMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

}  // namespace markov
