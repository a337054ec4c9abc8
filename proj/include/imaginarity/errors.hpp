#pragma once

#include <stdexcept>
#include <string>

namespace imag {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error { using Error::Error; };
class NotPSD : public Error { using Error::Error; };
class NoConvergence : public Error { using Error::Error; };
class InvalidExponent : public Error { using Error::Error; };
class DimMismatch : public Error { using Error::Error; };
class NotDensityMatrix : public Error { using Error::Error; };
class BlochOutOfBall : public Error { using Error::Error; };
class ParamOutOfRange : public Error { using Error::Error; };
class SupportError : public Error { using Error::Error; };
class NotNormalized : public Error { using Error::Error; };
class PreconditionViolated : public Error { using Error::Error; };
class NumericalError : public Error { using Error::Error; };
class UnknownCheck : public Error { using Error::Error; };

/// Malformed external input (state descriptors, CLI values). Exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace imag
