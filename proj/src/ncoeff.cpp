#include "qloop/ncoeff.hpp"

#include <stdexcept>

namespace qloop {

namespace {

BigInt binom_nonneg(long x, long k) {
    // 0 on any negative argument or k > x
    if (k < 0 || x < 0 || k > x) return BigInt(0);
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= BigInt(static_cast<long>(x - i));
        den *= BigInt(static_cast<long>(i + 1));
    }
    return num / den;
}

} // namespace

Rational p_polynomial(int m, int n, int r, const Rational& q) {
    Rational total(0);
    for (int p1 = r - n + 2; p1 <= r; ++p1) {
        if (p1 < 0) continue;
        BigInt c1 = binom_nonneg(n + p1 - 1, p1);
        if (c1 == 0) continue;
        Rational inner(0);
        for (int p2 = 0; p2 <= m - 1; ++p2) {
            BigInt c = binom_nonneg(m - 1, p2) * binom_nonneg(n - m - 1, r - p1 - p2);
            if (c == 0) continue;
            inner += Rational(c) * q.pow(2L * (2 * p2 - r + p1));
        }
        Rational term = Rational(c1) * inner;
        if ((r - p1) % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

Rational N_coefficient(int m, int n, int r, SeriesSign sign, const Rational& q, const Rational& a) {
    if (r < 1) throw std::domain_error("N_coefficient: r must be >= 1");
    Rational qfac = q.pow(-2) - q.pow(2);
    if (sign == SeriesSign::Plus) return a.pow(r - 1) * q.pow(n - 2 * m) * qfac * p_polynomial(m, n, r - 1, q);
    return a.pow(-r - 1) * q.pow(-n + 2 * m) * qfac * p_polynomial(n - m, n, r - 1, q);
}

USeries N_series(int m, int n, SeriesSign sign, const Rational& q, const Rational& a, int order) {
    Rational qi = q.inv();
    // gamma_{m,n}(u)
    std::vector<Rational> gnum{Rational(1)}, gden{Rational(1)};
    for (int i = 0; i < m; ++i) gnum = poly_mul(gnum, {qi, -(q * a)});
    for (int i = 0; i < n - m; ++i) gnum = poly_mul(gnum, {q, -(qi * a)});
    for (int i = 0; i < n; ++i) gden = poly_mul(gden, {Rational(1), -a});
    USeries gamma = USeries::from_rational(gnum, gden, sign, order);
    USeries win = USeries::from_rational({Rational(0), -q}, {qi, -(q * a)}, sign, order);
    USeries wwh = USeries::from_rational({Rational(0), qi}, {q, -(qi * a)}, sign, order);
    return gamma * (win + wwh);
}

} // namespace qloop
