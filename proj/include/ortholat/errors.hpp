#pragma once

#include <stdexcept>
#include <string>

namespace ortholat {

// Every failure mode carries a stable kind so callers can branch on it
// without parsing messages.
enum class Err {
  CycleDetected,
  NoUniqueBound,
  NoBottomTop,
  UnknownElement,
  TooLarge,
  NotInvolution,
  NotAntitone,
  ComplementLawFails,
  NotDominated,
  NotFactorial,
  NotModular,
  NotRegular,
  NoMinimalBelow,
  NotMinimal,
  NotDecomposable,
  AxiomFails,
  DimensionMismatch,
  WidthMismatch,
  AmbientMismatch,
  ParseError,
  DuplicatePair,
  IncompleteInvolution,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& detail)
      : std::runtime_error(std::string(err_name(kind)) + ": " + detail),
        kind_(kind) {}

  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace ortholat
