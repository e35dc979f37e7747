#include "qloop/lweight.hpp"

#include <algorithm>
#include <stdexcept>

#include "qloop/pieri.hpp"

namespace qloop {

LWeightSpace::LWeightSpace(const TupleBasis& basis, std::vector<int> sizes)
    : basis_(&basis), sizes_(std::move(sizes)) {
    global_ = basis.sector(sizes_);
    for (int g : global_) maxGrade_ = std::max(maxGrade_, basis.at(g).grade);
}

int LWeightSpace::local_index(int globalIdx) const {
    auto it = std::lower_bound(global_.begin(), global_.end(), globalIdx);
    if (it == global_.end() || *it != globalIdx)
        throw std::out_of_range("LWeightSpace: index not in sector");
    return static_cast<int>(it - global_.begin());
}

int LWeightSpace::grade(int i) const { return basis_->at(global_index(i)).grade; }

std::vector<int> LWeightSpace::grade_dims() const {
    std::vector<int> out(static_cast<std::size_t>(maxGrade_) + 1, 0);
    for (int i = 0; i < dim(); ++i) ++out[static_cast<std::size_t>(grade(i))];
    return out;
}

SparseMat<Rational> LWeightSpace::restrict(const SparseMat<Rational>& full) const {
    std::vector<bool> member(static_cast<std::size_t>(full.rows()), false);
    for (int g : global_) member[static_cast<std::size_t>(g)] = true;
    SparseMat<Rational> out(dim(), dim());
    for (int r = 0; r < full.rows(); ++r) {
        bool rin = member[static_cast<std::size_t>(r)];
        for (const auto& [c, v] : full.row(r)) {
            bool cin = member[static_cast<std::size_t>(c)];
            if (cin != rin)
                throw std::domain_error("LWeightSpace::restrict: operator does not preserve the sector");
            if (rin) out.set(local_index(r), local_index(c), v);
        }
    }
    return out;
}

Sl2Maps XYH_maps(const LWeightSpace& space) {
    const TupleBasis& basis = space.basis();
    const SpectralConfig& cfg = basis.cfg();
    int d = space.dim();
    Sl2Maps maps{SparseMat<Rational>(d, d), SparseMat<Rational>(d, d), SparseMat<Rational>(d, d)};

    int frame = 0;
    for (std::size_t s = 0; s < cfg.groups().size(); ++s)
        frame += space.sizes()[s] * (cfg.groups()[s].n - space.sizes()[s]);

    for (int i = 0; i < d; ++i) {
        const BasisElement& A = basis.at(space.global_index(i));
        Rational h(2 * A.grade - frame);
        if (!h.is_zero()) maps.H.set(i, i, h);

        for (std::size_t s = 0; s < A.parts.size(); ++s) {
            // X: add one box in slot s
            for (const Subset& C : pieri_e(A.parts[s], 1)) {
                std::vector<Subset> parts = A.parts;
                parts[s] = C;
                maps.X.add(space.local_index(basis.index_of(parts)), i, Rational(1));
            }
            // Y: remove one box in slot s; B differs from A by b = (element of
            // B \ A), weight (n_s - b) b
            const Subset& As = A.parts[s];
            int ns = As.n();
            for (int e : As.elements()) {
                if (e == 1 || As.contains(e - 1)) continue;
                Subset B = As.without(e).with(e - 1);
                int b = e - 1;
                std::vector<Subset> parts = A.parts;
                parts[s] = B;
                maps.Y.add(space.local_index(basis.index_of(parts)), i, Rational((ns - b) * b));
            }
        }
    }
    return maps;
}

std::vector<int> predicted_chains(const LWeightSpace& space) {
    std::vector<int> gd = space.grade_dims();
    int maxDim = 0;
    for (int v : gd) maxDim = std::max(maxDim, v);
    std::vector<int> chains;
    for (int t = 1; t <= maxDim; ++t) {
        int len = 0;
        for (int v : gd)
            if (v >= t) ++len;
        chains.push_back(len);
    }
    return chains; // weakly decreasing since the counts shrink with t
}

} // namespace qloop
