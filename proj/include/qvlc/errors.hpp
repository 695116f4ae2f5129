#pragma once

#include <stdexcept>
#include <string>

namespace qvlc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// linalg
struct NotHermitian : Error { using Error::Error; };
struct NotUnitTrace : Error { using Error::Error; };
struct NegativeEigenvalue : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// entropy
struct AlphaIsOne : Error { using Error::Error; };
struct AlphaOutOfRange : Error { using Error::Error; };

// codes
struct ZeroProbabilitySymbol : Error { using Error::Error; };
struct KraftViolated : Error { using Error::Error; };
struct InstanceTooLarge : Error { using Error::Error; };
struct InvalidDistribution : Error { using Error::Error; };
struct NotPrefixFree : Error { using Error::Error; };

// qcode
struct NonOrthonormalBasis : Error { using Error::Error; };
struct DuplicateCodeword : Error { using Error::Error; };
struct UnparsableString : Error { using Error::Error; };

// verify
struct InfiniteBound : Error { using Error::Error; };
struct ZeroEigenvalue : Error { using Error::Error; };

// io / cli
struct FileNotFound : Error { using Error::Error; };
struct MalformedInput : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

} // namespace qvlc
