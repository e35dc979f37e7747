#include "qloop/exact_rank.hpp"

#include <stdexcept>

namespace qloop {

int exact_rank_dense(std::vector<std::vector<BigInt>> a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    BigInt prevPivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) std::swap(a[piv], a[rank]);
        const BigInt pivot = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                BigInt num = a[r][c] * pivot - a[r][col] * a[rank][c];
                a[r][c] = num / prevPivot; // exact by Bareiss
            }
            a[r][col] = 0;
        }
        prevPivot = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

int exact_rank(const SparseMat<Rational>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m.rows()),
                                       std::vector<BigInt>(static_cast<std::size_t>(m.cols()), BigInt(0)));
    for (int r = 0; r < m.rows(); ++r) {
        // clear denominators row by row (does not change the rank)
        BigInt lcmDen = 1;
        for (const auto& [c, v] : m.row(r)) {
            BigInt d = v.denominator();
            lcmDen = lcm(lcmDen, d);
        }
        for (const auto& [c, v] : m.row(r))
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                v.numerator() * (lcmDen / v.denominator());
    }
    return exact_rank_dense(std::move(a));
}

SparseMat<Rational> nullspace_basis(const SparseMat<Rational>& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows),
                                         std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : m.row(r)) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;

    std::vector<int> pivotCol;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = rank;
        while (piv < rows && a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
        Rational inv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inv();
        for (int c = col; c < cols; ++c) a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = col; c < cols; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        }
        pivotCol.push_back(col);
        ++rank;
    }

    std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
    for (int c : pivotCol) isPivot[static_cast<std::size_t>(c)] = true;
    SparseMat<Rational> basis(cols, cols - rank);
    int out = 0;
    for (int free = 0; free < cols; ++free) {
        if (isPivot[static_cast<std::size_t>(free)]) continue;
        basis.set(free, out, Rational(1));
        for (int i = 0; i < rank; ++i) {
            const Rational& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(free)];
            if (!v.is_zero()) basis.set(pivotCol[static_cast<std::size_t>(i)], out, -v);
        }
        ++out;
    }
    return basis;
}

SparseMat<Rational> vstack(const std::vector<SparseMat<Rational>>& mats) {
    if (mats.empty()) return SparseMat<Rational>(0, 0);
    int cols = mats[0].cols();
    int rows = 0;
    for (const auto& m : mats) {
        if (m.cols() != cols) throw std::domain_error("vstack: column count mismatch");
        rows += m.rows();
    }
    SparseMat<Rational> out(rows, cols);
    int off = 0;
    for (const auto& m : mats) {
        for (int r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r)) out.set(off + r, c, v);
        off += m.rows();
    }
    return out;
}

} // namespace qloop
