#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qloop/rational.hpp"

namespace qloop {

/// Dense univariate polynomial over the rationals in the degeneration
/// variable eps. Coefficient index = degree; the top coefficient is nonzero
/// unless the polynomial is zero.
class EpsPoly {
public:
    EpsPoly() = default;
    EpsPoly(const Rational& c) { if (!c.is_zero()) coeffs_ = {c}; }
    EpsPoly(int c) : EpsPoly(Rational(c)) {}
    explicit EpsPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    /// c * eps^k
    static EpsPoly monomial(const Rational& c, int k);
    /// the variable itself
    static EpsPoly eps() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest nonzero degree (0 for the zero polynomial).
    int valuation() const;
    bool is_monomial() const { return !is_zero() && valuation() == degree(); }
    /// Divide by eps^k; requires valuation >= k.
    EpsPoly shifted_down(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }
    const Rational& leading() const { return coeffs_.back(); }

    Rational eval(const Rational& x) const;
    Rational constant_term() const { return coeff(0); }

    EpsPoly operator-() const;
    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b);
    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b);
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
    EpsPoly& operator+=(const EpsPoly& o) { *this = *this + o; return *this; }
    EpsPoly& operator-=(const EpsPoly& o) { *this = *this - o; return *this; }
    EpsPoly& operator*=(const EpsPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.coeffs_ == b.coeffs_; }

    EpsPoly scaled(const Rational& c) const;
    /// multiply by eps^k
    EpsPoly shifted(int k) const;
    EpsPoly monic() const { return is_zero() ? *this : scaled(leading().inv()); }
    EpsPoly pow(int e) const;

    /// Euclidean division; the divisor must be nonzero.
    static std::pair<EpsPoly, EpsPoly> divrem(const EpsPoly& a, const EpsPoly& b);
    /// Monic gcd.
    static EpsPoly gcd(EpsPoly a, EpsPoly b);

    std::string str() const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

} // namespace qloop
