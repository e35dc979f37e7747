#include "qloop/qtchar.hpp"

#include <algorithm>
#include <sstream>

#include "qloop/gaussian.hpp"
#include "qloop/jordan.hpp"

namespace qloop {

std::string YMonomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, e] : exps_) {
        if (!first) os << " ";
        os << "Y[" << a.str() << "]";
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::vector<std::pair<Rational, int>> roots_of(const SpectralConfig& cfg) {
    std::vector<std::pair<Rational, int>> roots;
    for (const auto& g : cfg.groups()) roots.emplace_back(g.a / cfg.q(), g.n);
    return roots;
}

YMonomial sector_monomial(const std::vector<std::pair<Rational, int>>& roots, const Rational& q,
                          const std::vector<int>& sizes) {
    YMonomial m;
    Rational q2 = q * q;
    for (std::size_t s = 0; s < roots.size(); ++s) {
        m.mul_var(roots[s].first, roots[s].second - sizes[s]);
        m.mul_var(roots[s].first * q2, -sizes[s]);
    }
    return m;
}

namespace {

BigInt binom(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

template <class F>
void for_each_sector(const std::vector<std::pair<Rational, int>>& roots, F&& f) {
    std::vector<int> sizes(roots.size(), 0);
    auto rec = [&](auto&& self, std::size_t s) -> void {
        if (s == roots.size()) {
            f(sizes);
            return;
        }
        for (int m = 0; m <= roots[s].second; ++m) {
            sizes[s] = m;
            self(self, s + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

QChar qchar_standard(const std::vector<std::pair<Rational, int>>& roots, const Rational& q) {
    QChar out;
    for_each_sector(roots, [&](const std::vector<int>& sizes) {
        BigInt mult = 1;
        for (std::size_t s = 0; s < roots.size(); ++s) mult *= binom(roots[s].second, sizes[s]);
        out[sector_monomial(roots, q, sizes)] += mult;
    });
    return out;
}

QTChar qtchar_standard(const std::vector<std::pair<Rational, int>>& roots, const Rational& q) {
    QTChar out;
    for_each_sector(roots, [&](const std::vector<int>& sizes) {
        TPoly poly(1);
        for (std::size_t s = 0; s < roots.size(); ++s) poly *= gaussian_binomial(roots[s].second, sizes[s]);
        out[sector_monomial(roots, q, sizes)] += poly.in_t_squared();
    });
    return out;
}

namespace {

std::string int_list(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace

Report verify_theorem_TH(const CoincidentModule& mod) {
    const SpectralConfig& cfg = mod.cfg();
    const TupleBasis& basis = mod.basis();
    auto roots = roots_of(cfg);
    Report rep;
    rep.title = "q,t-character coefficients vs Jordan grade dimensions (" + cfg.str() + ")";

    QTChar qt = qtchar_standard(roots, cfg.q());
    QChar qc = qchar_standard(roots, cfg.q());

    // chi_{q,t} at t=1 equals chi_q
    bool evalOk = qt.size() == qc.size();
    for (const auto& [m, poly] : qt) {
        auto it = qc.find(m);
        if (it == qc.end() || poly.eval_at_one() != it->second) evalOk = false;
    }
    rep.add("chi_{q,t} at t=1 equals chi_q", evalOk);

    // total dimension conservation
    BigInt total = 0;
    for (const auto& [m, poly] : qt) total += poly.eval_at_one();
    BigInt expectTotal = 1;
    for (int i = 0; i < cfg.total_n(); ++i) expectTotal *= 2;
    rep.add("sum of multiplicities = 2^deg P", total == expectTotal,
            total.get_str() + " vs " + expectTotal.get_str());

    // per-sector: sorted t^2-coefficients vs oracle grade dims
    for (const auto& [sizes, idxs] : basis.sectors()) {
        YMonomial mono = sector_monomial(roots, cfg.q(), sizes);
        const TPoly& poly = qt.at(mono);
        // coefficients of t^{2k}
        std::vector<int> coeffs;
        for (int k = 0; 2 * k <= poly.degree(); ++k) coeffs.push_back(static_cast<int>(poly.coeff(2 * k).get_si()));

        // the witness permutation: stable sort into weakly decreasing order
        std::vector<int> perm(coeffs.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            return coeffs[static_cast<std::size_t>(a)] > coeffs[static_cast<std::size_t>(b)];
        });
        std::vector<int> sorted;
        for (int p : perm) sorted.push_back(coeffs[static_cast<std::size_t>(p)]);

        LWeightSpace space(basis, sizes);
        JordanProfile prof = jordan_oracle(psi_mode(mod, space, SeriesSign::Plus, 1));
        bool ok = sorted == prof.grade_dims;
        std::ostringstream detail;
        if (ok) {
            detail << "sigma = " << int_list(perm);
        } else {
            detail << "sorted coeffs " << int_list(sorted) << " vs grade dims " << int_list(prof.grade_dims);
        }
        rep.add("monomial " + mono.str() + " (sector " + int_list(sizes) + ")", ok, detail.str());
    }
    return rep;
}

} // namespace qloop
