#pragma once

#include <stdexcept>
#include <string>

namespace dceopa {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad parameters, settings or requests. The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// The numerical machinery itself failed. The CLI maps these to exit code 3.
class NumericalError : public Error {
public:
  using Error::Error;
};

struct ThresholdViolation : ValidationError { using ValidationError::ValidationError; };
struct NonPositiveRate : ValidationError { using ValidationError::ValidationError; };
struct StepTooLarge : ValidationError { using ValidationError::ValidationError; };
struct LengthMismatch : ValidationError { using ValidationError::ValidationError; };
struct NotQuasiSteady : ValidationError { using ValidationError::ValidationError; };
struct AlreadyNormalized : ValidationError { using ValidationError::ValidationError; };
struct UnknownKey : ValidationError { using ValidationError::ValidationError; };
struct MissingRequired : ValidationError { using ValidationError::ValidationError; };
struct GridTooLarge : ValidationError { using ValidationError::ValidationError; };

struct OrderTooLarge : NumericalError { using NumericalError::NumericalError; };
struct ExponentOverflow : NumericalError { using NumericalError::NumericalError; };
struct SeriesDivergence : NumericalError { using NumericalError::NumericalError; };
struct VacuumReference : NumericalError { using NumericalError::NumericalError; };
struct ResolutionTooCoarse : NumericalError { using NumericalError::NumericalError; };
struct ZeroReference : NumericalError { using NumericalError::NumericalError; };

}  // namespace dceopa
