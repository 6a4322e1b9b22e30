#pragma once

#include <stdexcept>
#include <string>

namespace pw {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
struct InvalidArgumentError : Error {
  using Error::Error;
};

/// An element with non-positive area was handed to a kernel.
struct DegenerateElementError : Error {
  using Error::Error;
};

/// Cholesky hit a non-positive pivot; the matrix is not SPD.
struct NotSpdError : Error {
  using Error::Error;
};

/// A point lies outside every triangle of the mesh.
struct OutOfDomainError : Error {
  using Error::Error;
};

/// A probe trace does not carry enough signal to locate two maxima.
struct InsufficientSignalError : Error {
  using Error::Error;
};

/// All arrival times coincide; the line fit is singular.
struct SingularFitError : Error {
  using Error::Error;
};

/// No sign change was found in the scanned velocity interval.
struct NoRootError : Error {
  using Error::Error;
};

/// A config file failed to parse or violated an invariant.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace pw
