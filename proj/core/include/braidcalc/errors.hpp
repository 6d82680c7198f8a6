#pragma once

#include <stdexcept>
#include <string>

namespace braidcalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct ShapeError : Error {
  using Error::Error;
};
// A map required to factor through a quotient or a subobject does not.
struct FactorizationError : Error {
  using Error::Error;
};
// Resource bound d^N <= 4096 on materialized tensor powers.
struct TooLarge : Error {
  using Error::Error;
};
struct IncompatibleBraiding : Error {
  using Error::Error;
};
struct InvalidBaseHopf : Error {
  using Error::Error;
};
struct NotABiIdeal : Error {
  using Error::Error;
};
struct NotASubmodule : Error {
  using Error::Error;
};
// Input data violates a structural invariant (braid equation, axioms, ...).
struct InvalidInput : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

inline constexpr long long kMaxTensorDim = 4096;

}  // namespace braidcalc
