#pragma once

#include <string>
#include <vector>

#include "qloop/errors.hpp"
#include "qloop/rational.hpp"

namespace qloop {

/// Expansion direction: in positive powers of u, or positive powers of 1/u.
enum class SeriesSign { Plus, Minus };

inline const char* series_sign_name(SeriesSign s) { return s == SeriesSign::Plus ? "+" : "-"; }

/// Truncated power series in u (sign +) or u^{-1} (sign -) with exact
/// coefficients in K. Arithmetic is exact through the truncation order;
/// mixing signs or truncation orders is rejected.
template <class K>
class BasicUSeries {
public:
    BasicUSeries() : sign_(SeriesSign::Plus), modes_{K(0)} {}
    BasicUSeries(SeriesSign sign, int order) : sign_(sign), modes_(static_cast<std::size_t>(order) + 1, K(0)) {}
    BasicUSeries(SeriesSign sign, std::vector<K> modes) : sign_(sign), modes_(std::move(modes)) {
        if (modes_.empty()) modes_.push_back(K(0));
    }

    static BasicUSeries constant(const K& c, SeriesSign sign, int order) {
        BasicUSeries s(sign, order);
        s.modes_[0] = c;
        return s;
    }

    /// Exact expansion of num(u)/den(u) through the truncation order, in u for
    /// sign + and in u^{-1} for sign -. Polynomials are given by ascending
    /// u-coefficients. Throws NotExpandable on a pole in the chosen direction.
    static BasicUSeries from_rational(std::vector<K> num, std::vector<K> den, SeriesSign sign, int order);

    SeriesSign sign() const { return sign_; }
    int order() const { return static_cast<int>(modes_.size()) - 1; }
    /// Coefficient of u^{+r} (sign +) or u^{-r} (sign -).
    const K& mode(int r) const { return modes_.at(static_cast<std::size_t>(r)); }
    K& mode(int r) { return modes_.at(static_cast<std::size_t>(r)); }
    const std::vector<K>& modes() const { return modes_; }

    bool is_zero() const {
        for (const auto& m : modes_)
            if (!m.is_zero()) return false;
        return true;
    }

    friend BasicUSeries operator+(const BasicUSeries& a, const BasicUSeries& b) {
        a.check_compatible(b, "+");
        BasicUSeries r = a;
        for (std::size_t i = 0; i < r.modes_.size(); ++i) r.modes_[i] += b.modes_[i];
        return r;
    }
    friend BasicUSeries operator-(const BasicUSeries& a, const BasicUSeries& b) {
        a.check_compatible(b, "-");
        BasicUSeries r = a;
        for (std::size_t i = 0; i < r.modes_.size(); ++i) r.modes_[i] -= b.modes_[i];
        return r;
    }
    friend BasicUSeries operator*(const BasicUSeries& a, const BasicUSeries& b) {
        a.check_compatible(b, "*");
        BasicUSeries r(a.sign_, a.order());
        for (std::size_t i = 0; i < a.modes_.size(); ++i) {
            if (a.modes_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < b.modes_.size(); ++j)
                r.modes_[i + j] += a.modes_[i] * b.modes_[j];
        }
        return r;
    }
    BasicUSeries& operator+=(const BasicUSeries& o) { *this = *this + o; return *this; }
    BasicUSeries& operator-=(const BasicUSeries& o) { *this = *this - o; return *this; }
    BasicUSeries& operator*=(const BasicUSeries& o) { *this = *this * o; return *this; }
    friend bool operator==(const BasicUSeries& a, const BasicUSeries& b) {
        return a.sign_ == b.sign_ && a.modes_ == b.modes_;
    }

    BasicUSeries scaled(const K& c) const {
        BasicUSeries r = *this;
        for (auto& m : r.modes_) m *= c;
        return r;
    }

    BasicUSeries pow(int e) const {
        if (e < 0) throw std::domain_error("BasicUSeries::pow: negative exponent");
        BasicUSeries r = constant(K(1), sign_, order());
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

private:
    void check_compatible(const BasicUSeries& o, const char* op) const {
        if (sign_ != o.sign_)
            throw std::domain_error(std::string("BasicUSeries: mixing expansion directions in '") + op + "'");
        if (order() != o.order())
            throw std::domain_error(std::string("BasicUSeries: mixing truncation orders in '") + op + "'");
    }
    SeriesSign sign_;
    std::vector<K> modes_;
};

template <class K>
BasicUSeries<K> BasicUSeries<K>::from_rational(std::vector<K> num, std::vector<K> den, SeriesSign sign, int order) {
    auto trim = [](std::vector<K>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(num);
    trim(den);
    if (den.empty()) throw std::domain_error("BasicUSeries::from_rational: zero denominator");
    if (sign == SeriesSign::Minus) {
        // expand about u = infinity: reverse both against a common length
        if (num.size() > den.size())
            throw NotExpandable("pole at u = infinity: deg num > deg den");
        std::size_t len = den.size();
        num.resize(len, K(0));
        std::vector<K> rnum(num.rbegin(), num.rend()), rden(den.rbegin(), den.rend());
        num = std::move(rnum);
        den = std::move(rden);
        trim(num);
        trim(den);
        if (den.empty()) throw NotExpandable("pole at u = infinity");
    }
    if (den[0].is_zero()) {
        // a factor of u cancels only if num starts with at least as many
        std::size_t k = 0;
        while (k < den.size() && den[k].is_zero()) ++k;
        std::size_t j = 0;
        while (j < num.size() && num[j].is_zero()) ++j;
        if (num.empty()) {
            // 0 / (u^k * ...) is identically zero
            return BasicUSeries(sign, order);
        }
        if (j < k)
            throw NotExpandable(std::string("pole at u = ") + (sign == SeriesSign::Plus ? "0" : "infinity") +
                                ": denominator has zero constant term");
        num.erase(num.begin(), num.begin() + static_cast<std::ptrdiff_t>(k));
        den.erase(den.begin(), den.begin() + static_cast<std::ptrdiff_t>(k));
    }
    BasicUSeries out(sign, order);
    K inv_d0 = K(1) / den[0];
    for (int r = 0; r <= order; ++r) {
        K acc = static_cast<std::size_t>(r) < num.size() ? num[static_cast<std::size_t>(r)] : K(0);
        for (int i = 1; i <= r && static_cast<std::size_t>(i) < den.size(); ++i)
            acc -= den[static_cast<std::size_t>(i)] * out.modes_[static_cast<std::size_t>(r - i)];
        out.modes_[static_cast<std::size_t>(r)] = acc * inv_d0;
    }
    return out;
}

using USeries = BasicUSeries<Rational>;

/// Convolution of ascending-coefficient polynomial lists.
template <class K>
std::vector<K> poly_mul(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<K> out(a.size() + b.size() - 1, K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline USeries useries_from_rational(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                     SeriesSign sign, int order) {
    return USeries::from_rational(num, den, sign, order);
}

} // namespace qloop
