#pragma once

#include <map>
#include <vector>

#include "qloop/eps_ratfun.hpp"
#include "qloop/report.hpp"
#include "qloop/sparse_matrix.hpp"
#include "qloop/spectral.hpp"
#include "qloop/useries.hpp"

namespace qloop {

using ModeMatrix = SparseMat<EpsRatFun>;

/// The thin standard module in the diagonalizing basis: mode matrices of the
/// current generators acting on subset tuples, with entries rational in eps.
///
///   x^+_t V_A = sum_{j in A} a_j^t prod_{k notin A} (a_j q - a_k q^{-1})/(a_j - a_k) V_{A \ {j}}
///   x^-_t V_A = sum_{j notin A} a_j^t prod_{k in A} (a_k q - a_j q^{-1})/(a_k - a_j) V_{A + {j}}
///   phi^{+-}(u) V_A = V_A prod_{j in A} (q^{-1} - q a_j u)/(1 - a_j u)
///                         prod_{j notin A} (q - q^{-1} a_j u)/(1 - a_j u)
class VModule {
public:
    explicit VModule(const SpectralConfig& cfg, const TupleBasis& basis);

    const SpectralConfig& cfg() const { return *cfg_; }
    const TupleBasis& basis() const { return *basis_; }

    ModeMatrix xplus_mode(int t) const;
    ModeMatrix xminus_mode(int t) const;
    /// Diagonal; entry = mode r of the sign-directed expansion of the
    /// eigenvalue series. Requires 0 <= r <= R.
    ModeMatrix phi_mode(SeriesSign sign, int r) const;

    /// phi^{sigma}_s with the zero-extension conventions phi^+_s = 0 for
    /// s < 0 and phi^-_s = 0 for s > 0; s is the power of u.
    ModeMatrix phi_mode_at(SeriesSign sign, int s) const;

    /// Eigenvalue series of phi on a single basis vector, to the given order
    /// (default R). Built factor by factor, which keeps the coefficient
    /// denominators small in the u^{-1} direction.
    BasicUSeries<EpsRatFun> phi_series_on(int basisIndex, SeriesSign sign, int order = -1) const;

    /// Specialization of a mode matrix at a fixed eps.
    static SparseMat<Rational> specialize(const ModeMatrix& m, const Rational& eps0);

private:
    const SpectralConfig* cfg_;
    const TupleBasis* basis_;
};

/// Checks the defining relations as exact identities of mode matrices for all
/// indices in [-window, window]:
///   (i)   all phi modes commute pairwise,
///   (ii)  the mode recurrences of the phi-x exchange relations,
///   (iii) [x^+_m, x^-_k] = (phi^+_{m+k} - phi^-_{m+k}) / (q - q^{-1}),
///   (iv)  x^{+-}_{m+1} x^{+-}_k - q^{+-2} x^{+-}_m x^{+-}_{k+1}
///           = q^{+-2} x^{+-}_k x^{+-}_{m+1} - x^{+-}_{k+1} x^{+-}_m.
/// Independent (relation, index) checks fan out across worker threads.
/// With eps0 set, every mode matrix is specialized there first (distinct
/// rational spectral values); otherwise identities hold in the eps-function
/// field, which is substantially slower on large coincident configs.
Report verify_relations(const VModule& mod, int window, const Rational* eps0 = nullptr);

/// Same checks against caller-supplied x matrices (negative controls).
Report verify_relation_xx_commutator(const VModule& mod, const ModeMatrix& xp, const ModeMatrix& xm, int m, int k);

/// Highest-weight verification: x^+ kills V_empty, the eigenvalue series on
/// V_empty equals q^{deg P} P(uq^{-1})/P(uq), and lowering words span every
/// weight sector (exact rank at a specialized eps).
Report verify_highest_weight(const VModule& mod, const Rational& eps0 = Rational(1));

/// Lowering identity: x^-_{tau_m} ... x^-_{tau_1} V_empty = sum_B R_tau(a_B) V_B
/// at a specialized eps with pairwise distinct values.
Report verify_lowering_identity(const VModule& mod, const std::vector<long>& tau, const Rational& eps0 = Rational(1));

} // namespace qloop
