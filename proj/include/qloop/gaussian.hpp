#pragma once

#include "qloop/tpoly.hpp"

namespace qloop {

/// Gaussian (t-)binomial coefficient: the rank generating function of
/// partitions inside an m x (n-m) box. Computed by the Pascal-type
/// recurrence over exact integers; subset enumeration stays a test oracle.
TPoly gaussian_binomial(int n, int m);

} // namespace qloop
