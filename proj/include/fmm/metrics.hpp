#pragma once

#include "fmm/lattice.hpp"

namespace fmm {

/// Normalized mean squared error ||x - a||^2 / ||a||^2.
/// Throws DimensionError on length mismatch and DivisionByZeroError when a is
/// the zero vector.
double nmse(const FuzzyVector& x, const FuzzyVector& a);

}  // namespace fmm
