#pragma once

#include <stdexcept>
#include <string>

namespace hrmc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// finite field
struct NonPrimeModulus : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct UnsupportedSize : Error { using Error::Error; };
struct UnsupportedField : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };

// matrices and codes
struct DimensionMismatch : Error { using Error::Error; };
struct EnumerationTooLarge : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct MixedDimensions : Error { using Error::Error; };
struct ZeroCode : Error { using Error::Error; };
struct BoundViolated : Error { using Error::Error; };

// exact arithmetic
struct NonIntegralResult : Error { using Error::Error; };
struct NonIntegralDual : Error { using Error::Error; };
struct NonIntegralCount : Error { using Error::Error; };
struct EvenMinimumDistance : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct ContextMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// front end
struct ParseError : Error { using Error::Error; };
struct RouteMismatch : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

}  // namespace hrmc
