#include "qloop/gaussian.hpp"

#include <stdexcept>
#include <vector>

namespace qloop {

TPoly gaussian_binomial(int n, int m) {
    if (m < 0 || m > n) throw std::domain_error("gaussian_binomial: need 0 <= m <= n");
    // row k of the t-Pascal triangle: binom(k, j)_t = binom(k-1, j-1)_t + t^j binom(k-1, j)_t
    std::vector<TPoly> row{TPoly(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<TPoly> next(static_cast<std::size_t>(k) + 1, TPoly());
        next[0] = TPoly(1);
        next[static_cast<std::size_t>(k)] = TPoly(1);
        for (int j = 1; j < k; ++j) {
            std::vector<BigInt> mono(static_cast<std::size_t>(j) + 1, BigInt(0));
            mono.back() = 1;
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + TPoly(std::move(mono)) * row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

} // namespace qloop
