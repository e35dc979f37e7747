#pragma once

#include <map>
#include <string>
#include <vector>

#include "qloop/coincident.hpp"
#include "qloop/rational.hpp"
#include "qloop/report.hpp"
#include "qloop/tpoly.hpp"

namespace qloop {

/// Monomial in the commuting variables Y_a, a a rational spectral value;
/// zero exponents are not stored.
class YMonomial {
public:
    YMonomial() = default;

    int exponent(const Rational& a) const {
        auto it = exps_.find(a);
        return it == exps_.end() ? 0 : it->second;
    }
    void mul_var(const Rational& a, int e) {
        if (e == 0) return;
        auto it = exps_.find(a);
        if (it == exps_.end())
            exps_.emplace(a, e);
        else {
            it->second += e;
            if (it->second == 0) exps_.erase(it);
        }
    }
    YMonomial operator*(const YMonomial& o) const {
        YMonomial r = *this;
        for (const auto& [a, e] : o.exps_) r.mul_var(a, e);
        return r;
    }
    const std::map<Rational, int>& exponents() const { return exps_; }
    friend bool operator==(const YMonomial& a, const YMonomial& b) { return a.exps_ == b.exps_; }
    friend bool operator<(const YMonomial& a, const YMonomial& b) { return a.exps_ < b.exps_; }
    std::string str() const;

private:
    std::map<Rational, int> exps_;
};

using QChar = std::map<YMonomial, BigInt>;
/// Evaluating every TPoly at t = 1 recovers the q-character multiplicities.
using QTChar = std::map<YMonomial, TPoly>;

/// Expansion of prod_s (Y_{a_s} + Y^{-1}_{a_s q^2})^{n_s} over the Drinfel'd
/// roots a_s (pairwise distinct, nonzero).
QChar qchar_standard(const std::vector<std::pair<Rational, int>>& roots, const Rational& q);

/// t-graded refinement: the sector (m_s) monomial carries
/// prod_s t-binomial(n_s, m_s) evaluated in t^2.
QTChar qtchar_standard(const std::vector<std::pair<Rational, int>>& roots, const Rational& q);

/// Monomial of the sector (m_s): prod_s Y_{a_s}^{n_s - m_s} Y_{a_s q^2}^{-m_s}.
YMonomial sector_monomial(const std::vector<std::pair<Rational, int>>& roots, const Rational& q,
                          const std::vector<int>& sizes);

/// Drinfel'd roots of a config (group spectral parameter / q).
std::vector<std::pair<Rational, int>> roots_of(const SpectralConfig& cfg);

/// For every l-weight: the weakly-decreasing sort of the q,t-character
/// coefficients equals the Jordan grade dimensions from the oracle. Also pins
/// chi_{q,t} at t=1 = chi_q and total dimension 2^{deg P}. Reports the sorting
/// permutation realizing each match.
Report verify_theorem_TH(const CoincidentModule& mod);

} // namespace qloop
