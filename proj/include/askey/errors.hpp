#ifndef ASKEY_ERRORS_HPP
#define ASKEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace askey {

/// Base class for every error this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// powerseries
struct NonfiniteCoefficient : Error { using Error::Error; };
struct NonzeroConstantTerm : Error { using Error::Error; };
struct NonunitConstantTerm : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };
struct ZeroSeries : Error { using Error::Error; };

// polyfamilies
struct InvalidParameter : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };

// hermite_expansion
struct DegenerateB : Error { using Error::Error; };
struct TruncationOutOfRange : Error { using Error::Error; };

// laguerre_expansion
struct QuadraticNoRoot : Error { using Error::Error; };
struct DegenerateQuadratic : Error { using Error::Error; };
struct ZeroB : Error { using Error::Error; };
struct SinPhiZero : Error { using Error::Error; };

/// Raised when the printed Meixner-Pollaczek coefficient recursion and the
/// series engine disagree beyond tolerance. Carries the first bad index so
/// callers can report it instead of silently patching either route.
struct RecursionMismatch : Error {
  int k;
  RecursionMismatch(int k_, const std::string& what_) : Error(what_), k(k_) {}
};

// asymptotics_lab
struct GridTooSmall : Error { using Error::Error; };
struct BadGrid : Error { using Error::Error; };
struct NonpositiveError : Error { using Error::Error; };

// cli
struct UnknownFlag : Error { using Error::Error; };
struct MissingRequired : Error { using Error::Error; };
struct InvalidValue : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace askey

#endif  // ASKEY_ERRORS_HPP
