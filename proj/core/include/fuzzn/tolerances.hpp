#pragma once

namespace fuzzn::tol {

// Root finding / representation tolerance on the x axis.
inline constexpr double kX = 1e-10;

// Number of alpha levels used when validating side-function properties.
inline constexpr int kValidationGrid = 101;

// Alpha nodes used when an operation has to resample (mul).
inline constexpr int kResampleNodes = 257;

// Default tolerance for "membership derivative vanishes" assertions.
inline constexpr double kDDefault = 1e-7;

// Slope gap above which a boundary is classified as a kink.
inline constexpr double kKinkSlopeGap = 1e-6;

// Uniform alpha grid for the supremum metric (breakpoints are added on top).
inline constexpr int kMetricGrid = 1025;

// kDDefault unless overridden through the FUZZ_TOL environment variable.
double derivative_tol();

}  // namespace fuzzn::tol
