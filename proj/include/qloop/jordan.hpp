#pragma once

#include <vector>

#include "qloop/coincident.hpp"
#include "qloop/lweight.hpp"
#include "qloop/report.hpp"

namespace qloop {

/// Jordan structure of a nilpotent operator: chain lengths (weakly
/// decreasing) and the grade dimensions dim(ker N^{k+1}) - dim(ker N^k).
struct JordanProfile {
    std::vector<int> chain_lengths;
    std::vector<int> grade_dims;
};

/// Independent ground truth: chain lengths from the rank sequence of matrix
/// powers, ranks by exact fraction-free elimination. Throws NotNilpotent when
/// no power up to the dimension vanishes.
JordanProfile jordan_oracle(const SparseMat<Rational>& nilpotent);

/// psi^{+-}_{(m),(n); +-r} on a sector: the combinatorial phi mode minus
/// gamma_{(m),(n); +-r} id. Asserts psi_0 = 0 and strict grade-triangularity.
SparseMat<Rational> psi_mode(const CoincidentModule& mod, const LWeightSpace& space, SeriesSign sign, int r);

/// Per-sector statement of the Jordan-grade theorem: the oracle grade
/// dimensions of psi^+_1 equal the weakly-decreasing sort of the
/// t-binomial-product coefficients, and the filtration from the single mode
/// phi^+_1 equals the joint-kernel filtration over all modes r <= window.
/// Higher modes r in extraModes are checked after an explicit per-group
/// nonvanishing test of the superdiagonal coefficient.
Report verify_theorem_THX(const CoincidentModule& mod, int window = 2, const std::vector<int>& extraModes = {2, 3});

/// Sorted coefficient list of prod_s t-binomial(n_s, m_s), weakly decreasing.
std::vector<int> sorted_tbinomial_coeffs(const SpectralConfig& cfg, const std::vector<int>& sizes);

} // namespace qloop
