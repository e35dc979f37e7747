#include "qloop/zbasis.hpp"

#include "qloop/schur.hpp"

namespace qloop {

namespace {

std::vector<Rational> alpha_values(const SpectralGroup& g, const Subset& S) {
    std::vector<Rational> out;
    for (int j : S.elements()) out.push_back(g.alphas[static_cast<std::size_t>(j - 1)]);
    return out;
}

} // namespace

ZChangeOfBasis::ZChangeOfBasis(const TupleBasis& basis)
    : basis_(&basis), M_(basis.dim(), basis.dim()), Minv_(basis.dim(), basis.dim()) {
    const SpectralConfig& cfg = basis.cfg();
    const auto& groups = cfg.groups();

    for (int col = 0; col < basis.dim(); ++col) {
        const BasisElement& A = basis.at(col);
        for (int row = 0; row < basis.dim(); ++row) {
            const BasisElement& B = basis.at(row);
            if (A.sizes != B.sizes) continue;

            // M^B_A = prod_s s_{lambda^{A_s}}(alpha_{B_s}) * eps^{grade(A)}
            Rational mval(1);
            for (std::size_t s = 0; s < groups.size() && !mval.is_zero(); ++s)
                mval *= schur_eval(lambda_of(A.parts[s]), alpha_values(groups[s], B.parts[s]));
            if (!mval.is_zero()) M_.set(row, col, EpsRatFun(EpsPoly::monomial(mval, A.grade)));

            // Minv^B_A: here B plays the output (Z) label and A the V label
            // Minv^C_B = prod_s sign_w(comp C_s) s_{lambda^{comp C_s}}(alpha_{comp B_s})
            //            * eps^{|lambda^{comp C_s}| - m_s(n_s - m_s)}
            //            / prod_{i in B_s, j notin B_s} (alpha_i - alpha_j)
            Rational ival(1);
            int epow = 0;
            for (std::size_t s = 0; s < groups.size() && !ival.is_zero(); ++s) {
                const Subset& Cs = B.parts[s]; // output label
                const Subset& Bs = A.parts[s]; // input label
                Subset compC = Cs.complement();
                Subset compB = Bs.complement();
                int ms = Cs.size(), ns = Cs.n();
                Rational num = Rational(sign_w(compC)) *
                               schur_eval(lambda_of(compC), alpha_values(groups[s], compB));
                Rational den(1);
                for (int i : Bs.elements())
                    for (int j : compB.elements())
                        den *= groups[s].alphas[static_cast<std::size_t>(i - 1)] -
                               groups[s].alphas[static_cast<std::size_t>(j - 1)];
                ival *= num / den;
                epow += lambda_of(compC).weight() - ms * (ns - ms);
            }
            if (!ival.is_zero()) {
                EpsRatFun entry = epow >= 0 ? EpsRatFun(EpsPoly::monomial(ival, epow))
                                            : EpsRatFun(EpsPoly(ival), EpsPoly::monomial(Rational(1), -epow));
                Minv_.set(row, col, entry);
            }
        }
    }
}

} // namespace qloop
