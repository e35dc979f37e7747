#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qloop/report.hpp"
#include "qloop/sparse_matrix.hpp"
#include "qloop/useries.hpp"
#include "qloop/vmodule.hpp"
#include "qloop/zbasis.hpp"

namespace qloop {

/// Conjugates a V-basis mode matrix into the Z-basis and takes eps -> 0:
/// Minv * rho_V(x) * M, every entry reduced, then evaluated at eps = 0.
/// Any pole raises LimitSingular naming the entry; by the regularity of the
/// Z-basis this must never fire.
SparseMat<Rational> limit_mode(const ZChangeOfBasis& cob, const ModeMatrix& vmat);

/// The degenerate standard module: owns the configuration, basis, V-basis
/// matrices and the change of basis, and exposes both routes to the limiting
/// action. All coincident-limit consumers go through this.
class CoincidentModule {
public:
    explicit CoincidentModule(SpectralConfig cfg);

    const SpectralConfig& cfg() const { return cfg_; }
    const TupleBasis& basis() const { return *basis_; }
    const VModule& vmodule() const { return *vmod_; }
    const ZChangeOfBasis& cob() const { return *cob_; }

    /// Conjugation-limit pipeline (cached per mode).
    const SparseMat<Rational>& limit_xplus(int t) const;
    const SparseMat<Rational>& limit_xminus(int t) const;
    const SparseMat<Rational>& limit_phi(SeriesSign sign, int r) const;

    /// Pieri-combinatorial pipeline: composes phi_in, phi_wh and the scalar
    /// gamma prefactor as operator-valued series, extracts mode r.
    const SparseMat<Rational>& phi_combinatorial(SeriesSign sign, int r) const;

    /// Operator series coefficients of the commuting factors, to order R.
    const std::vector<SparseMat<Rational>>& phi_in_ops(SeriesSign sign) const;
    const std::vector<SparseMat<Rational>>& phi_wh_ops(SeriesSign sign) const;

    /// Scalar eigenvalue prefactor of the sector (m_s): mode expansion of
    /// prod_s (q^-1 - q a_s u)^{m_s} (q - q^-1 a_s u)^{n_s - m_s} / (1 - a_s u)^{n_s}.
    const USeries& gamma_series(const std::vector<int>& sizes, SeriesSign sign) const;
    Rational gamma_mode(const std::vector<int>& sizes, SeriesSign sign, int r) const;

    /// Leading-superdiagonal coefficient series of psi for group s on the
    /// sector: gamma(u) * (w_in^{(s)}(u) + w_wh^{(s)}(u)).
    USeries superdiagonal_series(const std::vector<int>& sizes, int group, SeriesSign sign) const;

private:
    SpectralConfig cfg_;
    std::unique_ptr<TupleBasis> basis_;
    std::unique_ptr<VModule> vmod_;
    std::unique_ptr<ZChangeOfBasis> cob_;

    mutable std::mutex mu_;
    mutable std::map<int, SparseMat<Rational>> xplus_, xminus_;
    mutable std::map<std::pair<int, int>, SparseMat<Rational>> phiLimit_, phiComb_;
    mutable std::map<int, std::vector<SparseMat<Rational>>> inOps_, whOps_;
    mutable std::map<std::pair<std::vector<int>, int>, USeries> gammas_;

    std::vector<SparseMat<Rational>> build_strip_ops(SeriesSign sign, bool vertical) const;
    SparseMat<Rational> build_phi_comb(SeriesSign sign, int r) const;
};

/// Exact cross-check of the two phi pipelines (hard assertions) plus the
/// informational comparison of the closed-form x action (single group only);
/// the latter records agreement or the discrepancy without failing.
Report verify_limit_consistency(const CoincidentModule& mod, int window);

/// Closed-form x action in the Z-basis (single-group configs). The
/// coefficients use the generalized binomial in the mode index.
SparseMat<Rational> xminus_closed_form(const CoincidentModule& mod, int t);
SparseMat<Rational> xplus_closed_form(const CoincidentModule& mod, int t);

} // namespace qloop
