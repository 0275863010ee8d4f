#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input errors. The CLI maps these to exit code 2.
struct DimensionMismatch : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct ZeroLinearForm : Error {
  using Error::Error;
};
struct NotParavector : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct ZeroRoot : Error {
  using Error::Error;
};
struct UnknownGroup : Error {
  using Error::Error;
};
struct BadKappaArity : Error {
  using Error::Error;
};
struct NegativeKappa : Error {
  using Error::Error;
};
struct ParityViolation : Error {
  using Error::Error;
};
struct SeedOrderTooHigh : Error {
  using Error::Error;
};
struct DependsOnX0 : Error {
  using Error::Error;
};
struct NotHomogeneous : Error {
  using Error::Error;
};
struct FactorNotMonogenic : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

// Exact division left a remainder. Inside a Dunkl operator this is an
// internal invariant violation; the CLI maps those to exit code 3.
struct NonDivisible : Error {
  using Error::Error;
};
struct SolveFailed : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};

}  // namespace dunkl
