#pragma once

#include <stdexcept>
#include <string>

namespace phasemass {

// Base class for every error thrown by this library.  Catching phasemass::Error
// is enough to separate our failures from harness or stdlib problems.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in different ambient spaces, or have different subspace
// dimensions, or row lengths disagree.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Input vectors do not span a subspace of the requested dimension.
struct RankDeficient : Error {
  using Error::Error;
};

// A numeric precondition was violated (non-finite input, index out of range,
// sample count below the supported minimum, ...).
struct DomainError : Error {
  using Error::Error;
};

// An exact enumeration was requested whose size exceeds the supported bound.
struct TooLarge : Error {
  using Error::Error;
};

// A rotation generator fails its preconditions (traceful, non-unit, or not a
// member of the expected solution set).
struct InvalidGenerator : Error {
  using Error::Error;
};

// A direction vector was expected to have unit length.
struct NotUnit : Error {
  using Error::Error;
};

// Masses must be strictly positive.
struct NonPositiveMass : Error {
  using Error::Error;
};

}  // namespace phasemass
