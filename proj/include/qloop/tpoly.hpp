#pragma once

#include <string>
#include <vector>

#include "qloop/rational.hpp"

namespace qloop {

/// Polynomial in t with nonnegative integer coefficients; the coefficient
/// domain of all counting and character data. Index = degree in t.
class TPoly {
public:
    TPoly() = default;
    TPoly(int c) : TPoly(BigInt(c)) {}
    TPoly(const BigInt& c) {
        if (c != 0) coeffs_ = {c};
        check_nonneg();
    }
    explicit TPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
        check_nonneg();
    }

    static TPoly t() { return TPoly(std::vector<BigInt>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : BigInt(0);
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator+=(const TPoly& o) { *this = *this + o; return *this; }
    TPoly& operator*=(const TPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator<(const TPoly& a, const TPoly& b) { return a.coeffs_ < b.coeffs_; }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    bool palindromic() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
        return true;
    }

    bool unimodal() const {
        bool descending = false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] > coeffs_[i - 1] && descending) return false;
            if (coeffs_[i] < coeffs_[i - 1]) descending = true;
        }
        return true;
    }

    /// t -> t^2 (degree doubling).
    TPoly in_t_squared() const {
        if (is_zero()) return TPoly();
        std::vector<BigInt> v(2 * coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
        return TPoly(std::move(v));
    }

    std::string str(const std::string& var = "t") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    void check_nonneg() const {
        for (const auto& c : coeffs_)
            if (c < 0) throw std::domain_error("TPoly: negative coefficient");
    }
    std::vector<BigInt> coeffs_;
};

inline TPoly operator+(const TPoly& a, const TPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return TPoly(std::move(v));
}

inline TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TPoly(std::move(v));
}

inline std::string TPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        if (coeff(k) == 0) continue;
        if (!s.empty()) s += " + ";
        if (k == 0)
            s += coeff(k).get_str();
        else {
            if (coeff(k) != 1) s += coeff(k).get_str() + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace qloop
