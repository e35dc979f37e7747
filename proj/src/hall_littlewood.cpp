#include "qloop/hall_littlewood.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qloop/errors.hpp"

namespace qloop {

Rational hall_littlewood_R(const std::vector<long>& tau, const std::vector<Rational>& ys, const Rational& q) {
    std::size_t m = ys.size();
    if (tau.size() != m) throw std::domain_error("hall_littlewood_R: |tau| must equal |ys|");
    for (std::size_t i = 0; i < m; ++i) {
        if (ys[i].is_zero()) throw std::domain_error("hall_littlewood_R: zero argument");
        for (std::size_t j = i + 1; j < m; ++j)
            if (ys[i] == ys[j])
                throw RequiresLimit("hall_littlewood_R: repeated arguments; perturb and take the limit");
    }
    Rational qi = q.inv();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    do {
        Rational term(1);
        for (std::size_t i = 0; i < m; ++i) term *= ys[perm[i]].pow(tau[i]);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                term *= (q * ys[perm[j]] - qi * ys[perm[i]]) / (ys[perm[j]] - ys[perm[i]]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace qloop
