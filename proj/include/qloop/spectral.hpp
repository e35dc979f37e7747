#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qloop/eps_poly.hpp"
#include "qloop/rational.hpp"
#include "qloop/subset.hpp"

namespace qloop {

/// One coincident group: n copies of the spectral parameter a, deformed to
/// a + eps*alpha_i with pairwise distinct nonzero slopes alpha_i.
struct SpectralGroup {
    Rational a;
    int n = 0;
    std::vector<Rational> alphas;
};

/// The data defining a standard module and its degeneration: spectral groups,
/// the deformation q, and the u-series truncation order R. The module is the
/// ordered tensor product of fundamental factors at a_i = a^{(s)} + eps a^{(s)}_i,
/// with Drinfel'd polynomial P(u) = prod_i (1 - a_i q^{-1} u).
class SpectralConfig {
public:
    SpectralConfig(std::vector<SpectralGroup> groups, Rational q, int truncation = -1);

    /// Builds a config from Drinfel'd roots (root : multiplicity); spectral
    /// parameters are root*q, slopes are alphaSeed + i within each group.
    static SpectralConfig from_roots(const std::vector<std::pair<Rational, int>>& roots, const Rational& q,
                                     int truncation = -1, const Rational& alphaSeed = Rational(0));

    const std::vector<SpectralGroup>& groups() const { return groups_; }
    const Rational& q() const { return q_; }
    int truncation() const { return R_; }
    int total_n() const { return n_; }
    int num_groups() const { return static_cast<int>(groups_.size()); }

    /// Full validation; throws ConfigError. Includes the tensor-ordering
    /// constraint: no two spectral parameters with ratio q^{+-2}.
    void validate(int maxDegree = 10) const;

    /// A copy with eps frozen at eps0: a_p becomes the constant a^{(s)} +
    /// eps0 * alpha_i (pairwise distinct by construction; throws ConfigError
    /// otherwise). Matrix entries over the specialized config are plain
    /// rationals, which is much faster than the eps-function field.
    SpectralConfig specialized(const Rational& eps0) const;
    bool is_specialized() const { return specialized_; }

    /// Global positions 1..n run through the groups in order.
    int group_of_position(int p) const;
    int local_index(int p) const;
    int group_offset(int s) const { return offsets_[static_cast<std::size_t>(s)]; }

    /// a_p as a polynomial in eps.
    EpsPoly a_poly(int p) const;
    /// a_p at eps = 0 (the group value).
    const Rational& a_limit(int p) const;
    /// a_p at a specific eps.
    Rational a_at(int p, const Rational& eps0) const;

    /// True when all specialized spectral values at eps0 are pairwise
    /// distinct and nonzero.
    bool epsilon_valid(const Rational& eps0) const;

    /// Drinfel'd polynomial coefficients, ascending in u, over EpsPoly:
    /// prod_i (1 - a_i q^{-1} u).
    std::vector<EpsPoly> drinfeld_poly() const;

    std::string str() const;

private:
    std::vector<SpectralGroup> groups_;
    Rational q_;
    int R_;
    int n_;
    std::vector<int> offsets_;
    bool specialized_ = false;
    Rational eps0_ = Rational(0);
};

/// One basis label: a tuple of subsets, one per group.
struct BasisElement {
    std::vector<Subset> parts;
    std::uint64_t flat = 0;    // global mask across all positions
    std::vector<int> sizes;    // |A^{(s)}|
    int total_size = 0;
    int grade = 0;             // sum_s |lambda^{A^{(s)}}|
    std::string str() const;
};

/// Fixed global enumeration of the subset-tuple basis, sorted by
/// (weight sector, grade, masks); every pipeline indexes matrices by it.
class TupleBasis {
public:
    explicit TupleBasis(const SpectralConfig& cfg);

    const SpectralConfig& cfg() const { return *cfg_; }
    int dim() const { return static_cast<int>(elems_.size()); }
    const BasisElement& at(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    int index_of_flat(std::uint64_t flat) const;
    int index_of(const std::vector<Subset>& parts) const;

    /// Sector key -> basis indices in enumeration order (grade-sorted).
    const std::map<std::vector<int>, std::vector<int>>& sectors() const { return sectors_; }
    const std::vector<int>& sector(const std::vector<int>& sizes) const;

    /// index of the empty tuple (the highest l-weight vector)
    int empty_index() const { return empty_; }

private:
    const SpectralConfig* cfg_;
    std::vector<BasisElement> elems_;
    std::map<std::uint64_t, int> flat_index_;
    std::map<std::vector<int>, std::vector<int>> sectors_;
    int empty_ = 0;
};

} // namespace qloop
