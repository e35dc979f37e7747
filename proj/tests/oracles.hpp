#pragma once

// Test-only oracles, independent of the library implementations they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qloop/rational.hpp"
#include "qloop/subset.hpp"
#include "qloop/tpoly.hpp"

namespace qloop::oracle {

/// Sign of the permutation sorting (B_1..B_k, comp(B)_1..comp(B)_{n-k}) by
/// counting inversions directly.
inline int permutation_sign_w(const Subset& B) {
    std::vector<int> w = B.elements();
    for (int j : B.complement().elements()) w.push_back(j);
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// Pieri sets by generate-and-filter: all C with |C| = |A| whose diagram
/// contains lambda^A with r extra boxes, no two added boxes sharing a row
/// (vertical) resp. column (horizontal).
inline std::vector<Subset> pieri_filter(const Subset& A, int r, bool vertical) {
    std::vector<Subset> out;
    Partition la = lambda_of(A);
    int m = A.size(), n = A.n();
    for (const Subset& C : subsets_of_size(n, m)) {
        Partition lc = lambda_of(C);
        if (!lc.contains(la) || lc.weight() - la.weight() != r) continue;
        bool ok = true;
        if (vertical) {
            // each row gains at most one box
            for (int i = 1; i <= m; ++i)
                if (lc.part(i) - la.part(i) > 1) ok = false;
        } else {
            // each column gains at most one box: compare conjugates
            int maxc = std::max(lc.part(1), la.part(1));
            for (int c = 1; c <= maxc; ++c) {
                int colC = 0, colA = 0;
                for (int i = 1; i <= m; ++i) {
                    if (lc.part(i) >= c) ++colC;
                    if (la.part(i) >= c) ++colA;
                }
                if (colC - colA > 1) ok = false;
            }
        }
        if (ok) out.push_back(C);
    }
    return out;
}

/// Gaussian binomial by direct subset enumeration of Eq-style counting.
inline TPoly gaussian_by_enumeration(int n, int m) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(m * (n - m)) + 1, BigInt(0));
    for (const Subset& A : subsets_of_size(n, m)) ++coeffs[static_cast<std::size_t>(lambda_of(A).weight())];
    return TPoly(std::move(coeffs));
}

/// Deterministic rational fuzzing.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    Rational rational(int span = 20) {
        int num = int_in(-span, span);
        int den = int_in(1, span);
        return Rational(num, den);
    }
    Rational nonzero_rational(int span = 20) {
        Rational r = rational(span);
        return r.is_zero() ? Rational(1, int_in(1, span)) : r;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace qloop::oracle
