#pragma once

#include <vector>

#include "qloop/rational.hpp"
#include "qloop/sparse_matrix.hpp"
#include "qloop/spectral.hpp"

namespace qloop {

/// One l-weight space of the degenerate module: the span of the basis tuples
/// with |A^{(s)}| = m_s, graded by k = sum_s |lambda^{A^{(s)}}|.
class LWeightSpace {
public:
    LWeightSpace(const TupleBasis& basis, std::vector<int> sizes);

    const TupleBasis& basis() const { return *basis_; }
    const std::vector<int>& sizes() const { return sizes_; }
    int dim() const { return static_cast<int>(global_.size()); }
    /// global basis index of local index i
    int global_index(int i) const { return global_[static_cast<std::size_t>(i)]; }
    int local_index(int globalIdx) const;
    int grade(int i) const;
    int max_grade() const { return maxGrade_; }
    /// dim G_k for k = 0..max_grade
    std::vector<int> grade_dims() const;

    /// Restriction of a full-module matrix to this sector (must preserve it).
    SparseMat<Rational> restrict(const SparseMat<Rational>& full) const;

private:
    const TupleBasis* basis_;
    std::vector<int> sizes_;
    std::vector<int> global_;
    int maxGrade_ = 0;
};

/// The poset sl2 realization on a sector:
///   X Z_A = sum over single-box e-moves (per group),
///   H Z_A = (2 k(A) - sum_s m_s (n_s - m_s)) Z_A,
///   Y Z_A = sum over single-box removals with weight (n_s - b) b.
/// Multi-group sectors carry the summed per-slot maps.
struct Sl2Maps {
    SparseMat<Rational> X, Y, H;
};
Sl2Maps XYH_maps(const LWeightSpace& space);

/// Chain lengths read off the grade dimensions: chain t has length
/// #{k : dim G_k >= t}; weakly decreasing by construction.
std::vector<int> predicted_chains(const LWeightSpace& space);

} // namespace qloop
