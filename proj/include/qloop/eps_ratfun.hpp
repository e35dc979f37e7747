#pragma once

#include <string>

#include "qloop/eps_poly.hpp"
#include "qloop/errors.hpp"

namespace qloop {

/// Univariate rational function in eps over the rationals, kept with coprime
/// numerator/denominator and monic denominator after every operation.
class EpsRatFun {
public:
    EpsRatFun() : num_(), den_(1) {}
    EpsRatFun(const Rational& c) : num_(c), den_(1) {}
    EpsRatFun(int c) : num_(Rational(c)), den_(1) {}
    EpsRatFun(const EpsPoly& p) : num_(p), den_(1) {}
    EpsRatFun(EpsPoly num, EpsPoly den);

    const EpsPoly& num() const { return num_; }
    const EpsPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_rational_const() const { return den_.is_one() && num_.is_constant(); }

    EpsRatFun operator-() const;
    friend EpsRatFun operator+(const EpsRatFun& a, const EpsRatFun& b);
    friend EpsRatFun operator-(const EpsRatFun& a, const EpsRatFun& b);
    friend EpsRatFun operator*(const EpsRatFun& a, const EpsRatFun& b);
    friend EpsRatFun operator/(const EpsRatFun& a, const EpsRatFun& b);
    EpsRatFun& operator+=(const EpsRatFun& o) { *this = *this + o; return *this; }
    EpsRatFun& operator-=(const EpsRatFun& o) { *this = *this - o; return *this; }
    EpsRatFun& operator*=(const EpsRatFun& o) { *this = *this * o; return *this; }
    EpsRatFun& operator/=(const EpsRatFun& o) { *this = *this / o; return *this; }
    friend bool operator==(const EpsRatFun& a, const EpsRatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    EpsRatFun inv() const;
    EpsRatFun pow(int e) const;

    /// Value at an arbitrary rational point; throws PoleAtZero-style domain
    /// errors only for x at an actual pole.
    Rational eval_at(const Rational& x) const;
    /// Value at eps = 0; PoleAtZero when the reduced denominator vanishes there.
    Rational eval_at_zero() const;
    bool has_pole_at_zero() const { return den_.constant_term().is_zero(); }

    std::string str() const;

private:
    void reduce();
    EpsPoly num_, den_;
};

/// Returns the coprime monic-denominator representative of f.
inline EpsRatFun rf_reduce(const EpsRatFun& f) { return f; }
inline EpsRatFun rf_reduce(const EpsPoly& num, const EpsPoly& den) { return EpsRatFun(num, den); }
inline Rational rf_eval_at_zero(const EpsRatFun& f) { return f.eval_at_zero(); }

} // namespace qloop
