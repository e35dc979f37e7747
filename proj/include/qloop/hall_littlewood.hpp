#pragma once

#include <vector>

#include "qloop/rational.hpp"

namespace qloop {

/// The symmetrized lowering kernel
///   R_tau(y) = sum_{sigma in S_m} prod_i y_{sigma(i)}^{tau_i}
///              prod_{i<j} (q y_{sigma(j)} - q^{-1} y_{sigma(i)}) / (y_{sigma(j)} - y_{sigma(i)}),
/// a symmetric Laurent polynomial evaluated by direct summation. Requires
/// pairwise distinct nonzero ys (RequiresLimit otherwise); tau entries may be
/// negative.
Rational hall_littlewood_R(const std::vector<long>& tau, const std::vector<Rational>& ys, const Rational& q);

} // namespace qloop
