#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace markov {

enum class Errc {
  InvalidArgument,
  InvalidTriplet,
  SingularTriplet,
  NotSingular,
  RootTriplet,
  NotFound,
  ResourceLimit,
  WrongSideForSingular,
  NonIntegralStep,
  BoundTooSmall,
  InvalidParity,
  UnsupportedFamily,
  NonIntegralSolution,
  DecompositionMismatch,
  DivisionByZero,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error carrying a machine-readable code. Every failure raised by the
/// library is one of these; std::bad_alloc and friends pass through untouched.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace markov
