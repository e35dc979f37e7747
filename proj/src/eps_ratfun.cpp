#include "qloop/eps_ratfun.hpp"

namespace qloop {

EpsRatFun::EpsRatFun(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("EpsRatFun: zero denominator");
    reduce();
}

void EpsRatFun::reduce() {
    if (num_.is_zero()) {
        den_ = EpsPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        // common eps power is by far the most frequent cancellation
        int v = std::min(num_.valuation(), den_.valuation());
        if (v > 0) {
            num_ = num_.shifted_down(v);
            den_ = den_.shifted_down(v);
        }
        if (den_.is_monomial()) {
            // nothing further can cancel against c*eps^k
        } else if (!den_.is_constant()) {
            EpsPoly g = EpsPoly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = EpsPoly::divrem(num_, g).first;
                den_ = EpsPoly::divrem(den_, g).first;
            }
        }
    }
    if (!den_.is_one()) {
        Rational lc = den_.leading();
        den_ = den_.scaled(lc.inv());
        num_ = num_.scaled(lc.inv());
    }
}

EpsRatFun EpsRatFun::operator-() const {
    EpsRatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

EpsRatFun operator+(const EpsRatFun& a, const EpsRatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) {
        EpsRatFun r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    if (a.den_ == b.den_) return EpsRatFun(a.num_ + b.num_, a.den_);
    return EpsRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsRatFun operator-(const EpsRatFun& a, const EpsRatFun& b) {
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) {
        EpsRatFun r;
        r.num_ = a.num_ - b.num_;
        return r;
    }
    if (a.den_ == b.den_) return EpsRatFun(a.num_ - b.num_, a.den_);
    return EpsRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

EpsRatFun operator*(const EpsRatFun& a, const EpsRatFun& b) {
    if (a.is_zero() || b.is_zero()) return EpsRatFun();
    // constants scale without any gcd work
    if (a.is_rational_const()) {
        EpsRatFun r;
        r.num_ = b.num_.scaled(a.num_.constant_term());
        r.den_ = b.den_;
        return r;
    }
    if (b.is_rational_const()) {
        EpsRatFun r;
        r.num_ = a.num_.scaled(b.num_.constant_term());
        r.den_ = a.den_;
        return r;
    }
    if (a.is_polynomial() && b.is_polynomial()) {
        EpsRatFun r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    // cross-reduce before multiplying to keep degrees down
    EpsPoly an = a.num_, bd = b.den_;
    if (!bd.is_one()) {
        EpsPoly g1 = EpsPoly::gcd(an, bd);
        if (g1.degree() > 0) {
            an = EpsPoly::divrem(an, g1).first;
            bd = EpsPoly::divrem(bd, g1).first;
        }
    }
    EpsPoly bn = b.num_, ad = a.den_;
    if (!ad.is_one()) {
        EpsPoly g2 = EpsPoly::gcd(bn, ad);
        if (g2.degree() > 0) {
            bn = EpsPoly::divrem(bn, g2).first;
            ad = EpsPoly::divrem(ad, g2).first;
        }
    }
    return EpsRatFun(an * bn, ad * bd);
}

EpsRatFun operator/(const EpsRatFun& a, const EpsRatFun& b) { return a * b.inv(); }

EpsRatFun EpsRatFun::inv() const {
    if (is_zero()) throw std::domain_error("EpsRatFun: inverse of zero");
    return EpsRatFun(den_, num_);
}

EpsRatFun EpsRatFun::pow(int e) const {
    if (e == 0) return EpsRatFun(Rational(1));
    EpsRatFun base = e < 0 ? inv() : *this;
    int n = e < 0 ? -e : e;
    EpsRatFun r(Rational(1));
    while (n > 0) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

Rational EpsRatFun::eval_at(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("EpsRatFun: evaluation at a pole (eps = " + x.str() + ")");
    return num_.eval(x) / d;
}

Rational EpsRatFun::eval_at_zero() const {
    Rational d = den_.constant_term();
    if (d.is_zero()) throw PoleAtZero("pole at eps = 0 in " + str());
    return num_.constant_term() / d;
}

std::string EpsRatFun::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace qloop
