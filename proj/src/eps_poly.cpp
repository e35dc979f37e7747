#include "qloop/eps_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qloop {

EpsPoly EpsPoly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return EpsPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return EpsPoly(std::move(v));
}

Rational EpsPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return EpsPoly(std::move(v));
}

EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return EpsPoly(std::move(v));
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    if (a.is_zero() || b.is_zero()) return EpsPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return EpsPoly(std::move(v));
}

EpsPoly EpsPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return EpsPoly();
    EpsPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

EpsPoly EpsPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw std::domain_error("EpsPoly::shifted: negative shift");
    std::vector<Rational> v(coeffs_.size() + static_cast<std::size_t>(k), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return EpsPoly(std::move(v));
}

int EpsPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return 0;
}

EpsPoly EpsPoly::shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (valuation() < k) throw std::domain_error("EpsPoly::shifted_down: valuation too small");
    std::vector<Rational> v(coeffs_.begin() + k, coeffs_.end());
    return EpsPoly(std::move(v));
}

EpsPoly EpsPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("EpsPoly::pow: negative exponent");
    EpsPoly r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

std::pair<EpsPoly, EpsPoly> EpsPoly::divrem(const EpsPoly& a, const EpsPoly& b) {
    if (b.is_zero()) throw std::domain_error("EpsPoly::divrem: division by zero polynomial");
    EpsPoly rem = a;
    if (a.degree() < b.degree()) return {EpsPoly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    Rational lb = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        Rational c = rem.leading() * lb;
        q[static_cast<std::size_t>(k)] = c;
        rem -= b.shifted(k).scaled(c);
    }
    return {EpsPoly(std::move(q)), rem};
}

namespace {

using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_primitive_int(const EpsPoly& p) {
    BigInt den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.denominator());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (den / c.denominator()));
    BigInt content = 0;
    for (const auto& c : out) content = ::gcd(content, c);
    if (content > 1)
        for (auto& c : out) c /= content;
    return out;
}

void make_primitive(ZPoly& p) {
    BigInt content = 0;
    for (const auto& c : p) content = ::gcd(content, c);
    if (content > 1)
        for (auto& c : p) c /= content;
}

// pseudo-remainder of a by b (deg a >= deg b >= 0)
ZPoly prem(ZPoly a, const ZPoly& b) {
    const BigInt& lb = b.back();
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    for (int k = da; k >= db; --k) {
        BigInt top = a[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        for (int i = 0; i <= k; ++i)
            if (i < k - db || i > k) a[static_cast<std::size_t>(i)] *= lb;
        for (int i = 0; i < db; ++i)
            a[static_cast<std::size_t>(k - db + i)] =
                a[static_cast<std::size_t>(k - db + i)] * lb - top * b[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(k)] = 0;
    }
    ztrim(a);
    return a;
}

} // namespace

EpsPoly EpsPoly::gcd(EpsPoly a, EpsPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return EpsPoly(1);
    // common eps power first, then a primitive remainder sequence over the
    // integers (rational Euclid suffers badly from coefficient growth)
    int v = std::min(a.valuation(), b.valuation());
    ZPoly za = to_primitive_int(a.shifted_down(v));
    ZPoly zb = to_primitive_int(b.shifted_down(v));
    if (za.size() < zb.size()) std::swap(za, zb);
    while (!zb.empty()) {
        if (zb.size() == 1) {
            za = {BigInt(1)};
            break;
        }
        ZPoly r = prem(za, zb);
        make_primitive(r);
        za = std::move(zb);
        zb = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(za.size());
    for (const auto& c : za) coeffs.push_back(Rational(c));
    return EpsPoly(std::move(coeffs)).monic().shifted(v);
}

std::string EpsPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational ac = c.sign() < 0 ? -c : c;
        if (k == 0 || !ac.is_one()) os << ac.str();
        if (k > 0) {
            if (!ac.is_one()) os << "*";
            os << "e";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace qloop
