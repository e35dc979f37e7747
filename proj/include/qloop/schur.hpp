#pragma once

#include <vector>

#include "qloop/rational.hpp"
#include "qloop/subset.hpp"

namespace qloop {

/// Exact Schur polynomial value s_lambda(zs). The number of values must equal
/// the stored number of parts (zeros included). Uses the bialternant
/// determinant ratio when the zs are pairwise distinct and the semistandard
/// branching sum otherwise; the two agree wherever both apply.
Rational schur_eval(const Partition& lam, const std::vector<Rational>& zs);

/// The branching-rule route on its own (no denominators, any arguments).
Rational schur_eval_tableau(const Partition& lam, const std::vector<Rational>& zs);

/// The determinant-ratio route; requires pairwise distinct arguments.
Rational schur_eval_bialternant(const Partition& lam, const std::vector<Rational>& zs);

/// Elementary symmetric e_r and complete homogeneous h_r; e_r = 0 for
/// r > #values.
Rational elem_eval(int r, const std::vector<Rational>& zs);
Rational complete_eval(int r, const std::vector<Rational>& zs);

/// Exact determinant by fraction Gaussian elimination (small dense use only).
Rational det_rational(std::vector<std::vector<Rational>> m);

} // namespace qloop
