#pragma once

#include <stdexcept>

namespace lmvt {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimensions or parameter ranges are inconsistent (bad matrix shape, wrong
// allocation length, invalid coefficients).
struct InstanceShapeError : Error {
  using Error::Error;
};

// An allocation references a video index outside [0, n).
struct InvalidAllocationError : Error {
  using Error::Error;
};

// A bit-count magnitude left the supported 64-bit range.
struct CapacityError : Error {
  using Error::Error;
};

// A brute-force oracle was asked to enumerate beyond its configured cap.
struct TooLargeForOracleError : Error {
  using Error::Error;
};

// A dynamic program touched more states than its configured budget.
struct StateBudgetError : Error {
  using Error::Error;
};

// A slot allocation cannot be decoded into a partition witness.
struct InvalidWitnessError : Error {
  using Error::Error;
};

}  // namespace lmvt
