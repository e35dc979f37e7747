#include "qloop/schur.hpp"

#include <stdexcept>

namespace qloop {

Rational det_rational(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = m[col][col].inv();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Rational schur_eval_bialternant(const Partition& lam, const std::vector<Rational>& zs) {
    std::size_t m = zs.size();
    if (static_cast<int>(m) != lam.num_parts())
        throw std::domain_error("schur_eval: #values must equal #parts");
    if (m == 0) return Rational(1);
    // exponents lambda_{m+1-i} + i - 1 are strictly increasing in i
    std::vector<std::vector<Rational>> num(m, std::vector<Rational>(m));
    std::vector<std::vector<Rational>> den(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        long enum_ = lam.part(static_cast<int>(m - i)) + static_cast<long>(i);
        for (std::size_t j = 0; j < m; ++j) {
            num[i][j] = zs[j].pow(enum_);
            den[i][j] = zs[j].pow(static_cast<long>(i));
        }
    }
    Rational d = det_rational(std::move(den));
    if (d.is_zero()) throw std::domain_error("schur_eval_bialternant: repeated arguments");
    return det_rational(std::move(num)) / d;
}

namespace {

// branching rule: s_lambda(z_1..z_m) = sum over mu interlacing lambda of
// z_m^{|lambda|-|mu|} s_mu(z_1..z_{m-1})
Rational branch(const std::vector<int>& lam, const std::vector<Rational>& zs, std::size_t m) {
    if (m == 0) return Rational(1);
    const Rational& z = zs[m - 1];
    // enumerate mu with lambda_{i+1} <= mu_i <= lambda_i
    std::vector<int> mu(m - 1);
    Rational total(0);

    struct Rec {
        const std::vector<int>& lam;
        const std::vector<Rational>& zs;
        std::size_t m;
        std::vector<int>& mu;
        Rational& total;
        const Rational& z;
        void go(std::size_t i, int boxesRemoved) {
            if (i == m - 1) {
                int extra = lam[m - 1]; // bottom row contributes fully to the difference
                Rational sub = branch(mu, zs, m - 1);
                total += z.pow(boxesRemoved + extra) * sub;
                return;
            }
            for (int v = lam[i + 1]; v <= lam[i]; ++v) {
                mu[i] = v;
                go(i + 1, boxesRemoved + (lam[i] - v));
                // difference counts boxes in row i not kept in mu
            }
        }
    };
    if (m == 1) return z.pow(lam[0]);
    Rec rec{lam, zs, m, mu, total, z};
    rec.go(0, 0);
    return total;
}

} // namespace

Rational schur_eval_tableau(const Partition& lam, const std::vector<Rational>& zs) {
    std::size_t m = zs.size();
    if (static_cast<int>(m) != lam.num_parts())
        throw std::domain_error("schur_eval: #values must equal #parts");
    if (m == 0) return Rational(1);
    std::vector<int> parts = lam.parts();
    return branch(parts, zs, m);
}

Rational schur_eval(const Partition& lam, const std::vector<Rational>& zs) {
    bool distinct = true;
    for (std::size_t i = 0; i < zs.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            if (zs[i] == zs[j]) {
                distinct = false;
                break;
            }
    if (distinct && !zs.empty()) return schur_eval_bialternant(lam, zs);
    return schur_eval_tableau(lam, zs);
}

Rational elem_eval(int r, const std::vector<Rational>& zs) {
    if (r < 0) throw std::domain_error("elem_eval: r must be >= 0");
    if (r > static_cast<int>(zs.size())) return Rational(0);
    // running coefficients of prod (1 + t z_i)
    std::vector<Rational> e(static_cast<std::size_t>(r) + 1, Rational(0));
    e[0] = Rational(1);
    for (const auto& z : zs)
        for (int k = std::min<int>(r, static_cast<int>(zs.size())); k >= 1; --k)
            e[static_cast<std::size_t>(k)] += z * e[static_cast<std::size_t>(k - 1)];
    return e[static_cast<std::size_t>(r)];
}

Rational complete_eval(int r, const std::vector<Rational>& zs) {
    if (r < 0) throw std::domain_error("complete_eval: r must be >= 0");
    // h_r(z_1..z_k) = h_r(z_1..z_{k-1}) + z_k h_{r-1}(z_1..z_k)
    std::vector<Rational> h(static_cast<std::size_t>(r) + 1, Rational(0));
    h[0] = Rational(1);
    for (const auto& z : zs)
        for (int k = 1; k <= r; ++k) h[static_cast<std::size_t>(k)] += z * h[static_cast<std::size_t>(k - 1)];
    return h[static_cast<std::size_t>(r)];
}

} // namespace qloop
