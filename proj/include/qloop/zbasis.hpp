#pragma once

#include "qloop/sparse_matrix.hpp"
#include "qloop/spectral.hpp"
#include "qloop/vmodule.hpp"

namespace qloop {

/// The Schur-polynomial change of basis Z_A = sum_B V_B M^B_A and its exact
/// inverse. Per group, M^B_A = s_{lambda^A}(z_B) with z_i = eps*alpha_i, so
/// every entry is a rational multiple of a power of eps; the inverse carries
/// the Vandermonde denominators
///   V_B = 1/prod_{i in B, j notin B}(z_i - z_j)
///         sum_C eps(w_{comp C}) s_{lambda^{comp C}}(z_{comp B}) Z_C.
/// Multi-group configs tensor the per-group blocks.
class ZChangeOfBasis {
public:
    explicit ZChangeOfBasis(const TupleBasis& basis);

    const TupleBasis& basis() const { return *basis_; }
    /// Block-diagonal across weight sectors; entries are eps-monomials.
    const ModeMatrix& M() const { return M_; }
    const ModeMatrix& Minv() const { return Minv_; }

private:
    const TupleBasis* basis_;
    ModeMatrix M_, Minv_;
};

} // namespace qloop
