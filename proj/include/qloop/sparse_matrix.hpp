#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace qloop {

/// Row-major sparse matrix over an exact coefficient field K. Stored entries
/// are nonzero; zero results of arithmetic are pruned. Deterministic
/// iteration order (ordered maps).
template <class K>
class SparseMat {
public:
    SparseMat() : rows_(0), cols_(0) {}
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, K(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, K v) {
        check(r, c);
        if (v.is_zero())
            data_[static_cast<std::size_t>(r)].erase(c);
        else
            data_[static_cast<std::size_t>(r)][c] = std::move(v);
    }

    void add(int r, int c, const K& v) {
        check(r, c);
        if (v.is_zero()) return;
        auto& row = data_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) row.erase(it);
        }
    }

    K get(int r, int c) const {
        check(r, c);
        const auto& row = data_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? K(0) : it->second;
    }

    const std::map<int, K>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    bool is_zero() const {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[static_cast<std::size_t>(r)])
                if (c != r) return false;
        return true;
    }

    /// First nonzero entry in row-major order, for residual reporting.
    bool first_nonzero(int& r, int& c, K& v) const {
        for (int i = 0; i < rows_; ++i) {
            const auto& row = data_[static_cast<std::size_t>(i)];
            if (!row.empty()) {
                r = i;
                c = row.begin()->first;
                v = row.begin()->second;
                return true;
            }
        }
        return false;
    }

    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        a.check_same_shape(b);
        SparseMat out = a;
        for (int r = 0; r < b.rows_; ++r)
            for (const auto& [c, v] : b.data_[static_cast<std::size_t>(r)]) out.add(r, c, v);
        return out;
    }

    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        a.check_same_shape(b);
        SparseMat out = a;
        for (int r = 0; r < b.rows_; ++r)
            for (const auto& [c, v] : b.data_[static_cast<std::size_t>(r)]) out.add(r, c, -v);
        return out;
    }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("SparseMat: shape mismatch in product");
        SparseMat out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (const auto& [k, av] : a.data_[static_cast<std::size_t>(i)]) {
                for (const auto& [j, bv] : b.data_[static_cast<std::size_t>(k)]) out.add(i, j, av * bv);
            }
        }
        return out;
    }

    SparseMat scaled(const K& s) const {
        SparseMat out(rows_, cols_);
        if (s.is_zero()) return out;
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[static_cast<std::size_t>(r)]) out.set(r, c, v * s);
        return out;
    }

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Entry-wise map into another coefficient type.
    template <class F>
    auto mapped(F&& f) const -> SparseMat<decltype(f(std::declval<const K&>()))> {
        using K2 = decltype(f(std::declval<const K&>()));
        SparseMat<K2> out(rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[static_cast<std::size_t>(r)]) out.set(r, c, f(v));
        return out;
    }

    std::vector<K> apply(const std::vector<K>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::domain_error("SparseMat: vector length mismatch");
        std::vector<K> y(static_cast<std::size_t>(rows_), K(0));
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[static_cast<std::size_t>(r)])
                y[static_cast<std::size_t>(r)] += v * x[static_cast<std::size_t>(c)];
        return y;
    }

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("SparseMat: index out of range");
    }
    void check_same_shape(const SparseMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("SparseMat: shape mismatch");
    }

    int rows_, cols_;
    std::vector<std::map<int, K>> data_;
};

} // namespace qloop
