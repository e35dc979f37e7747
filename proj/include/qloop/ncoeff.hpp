#pragma once

#include "qloop/rational.hpp"
#include "qloop/tpoly.hpp"
#include "qloop/useries.hpp"

namespace qloop {

/// The q-polynomial P_{m,n;r}(q) from the superdiagonal expansion:
///   sum_{p1=r-n+2}^{r} (-1)^{r-p1} C(n+p1-1, p1)
///     sum_{p2=0}^{m-1} C(m-1, p2) C(n-m-1, r-p1-p2) q^{2(2 p2 - r + p1)},
/// with binomials vanishing on negative arguments. P_{m,n;0} = 1.
Rational p_polynomial(int m, int n, int r, const Rational& q);

/// Leading-superdiagonal coefficient of psi^{+-}_{m,n; +-r} relative to X,
/// for r >= 1:
///   N^+_{m,n;r}  = a^{ r-1} q^{ n-2m} (q^-2 - q^2) P_{m,n;r-1}(q)
///   N^-_{m,n;-r} = a^{-r-1} q^{-n+2m} (q^-2 - q^2) P_{n-m,n;r-1}(q).
/// The minus branch follows the series expansion of gamma_{m,n}(u) times the
/// strip weights about u = infinity (equivalently P_{m,n;r-1} at q^{-1}).
Rational N_coefficient(int m, int n, int r, SeriesSign sign, const Rational& q, const Rational& a);

/// The full superdiagonal series N^{+-}_{m,n}(u) these modes come from:
///   gamma_{m,n}(u) ( -qu/(q^-1 - q a u) + q^-1 u/(q - q^-1 a u) ).
USeries N_series(int m, int n, SeriesSign sign, const Rational& q, const Rational& a, int order);

} // namespace qloop
