#pragma once

#include <stdexcept>

namespace chopf {

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (matrix ops, tensor legs, colour arity).
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A pivot fell below the elimination threshold.
struct Singular : Error {
  using Error::Error;
};

/// The exponential series hit its term cap before reaching tolerance.
struct NonConvergence : Error {
  using Error::Error;
};

/// A generator id is not defined in the active representation or model.
struct UnknownGenerator : Error {
  using Error::Error;
};

/// Spin is not a nonnegative half-integer within the supported range.
struct InvalidSpin : Error {
  using Error::Error;
};

/// A deformation parameter is outside its admissible set.
struct InvalidParameter : Error {
  using Error::Error;
};

/// A colour component is (or became) zero.
struct ZeroColour : Error {
  using Error::Error;
};

}  // namespace chopf
