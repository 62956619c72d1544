#pragma once

#include <vector>

#include "gcum/rational.hpp"

namespace gcum::bessel {

/// Determinantal evaluation at theta = 1:
///   prod_{k<N} k! * det[exp(a_i x_j)] / prod_{i<j} (x_i - x_j)(a_i - a_j).
/// Entries of a and of x must each be pairwise distinct (no confluent-limit
/// handling; callers perturb instead). Computed in prec_bits-bit float
/// arithmetic so the Vandermonde cancellation at nearly-coincident x does
/// not swamp the result, then rounded to double.
double hciz_theta1(const std::vector<algebra::Rational>& a, const std::vector<algebra::Rational>& x,
                   int prec_bits = 256);

}  // namespace gcum::bessel
