#include "qloop/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "qloop/errors.hpp"

namespace qloop {

SpectralConfig::SpectralConfig(std::vector<SpectralGroup> groups, Rational q, int truncation)
    : groups_(std::move(groups)), q_(std::move(q)) {
    n_ = 0;
    offsets_.clear();
    for (const auto& g : groups_) {
        offsets_.push_back(n_);
        n_ += g.n;
    }
    R_ = truncation >= 0 ? truncation : 2 * n_ + 2;
}

SpectralConfig SpectralConfig::from_roots(const std::vector<std::pair<Rational, int>>& roots, const Rational& q,
                                          int truncation, const Rational& alphaSeed) {
    std::vector<SpectralGroup> gs;
    for (const auto& [root, mult] : roots) {
        SpectralGroup g;
        g.a = root * q;
        g.n = mult;
        for (int i = 1; i <= mult; ++i) g.alphas.push_back(alphaSeed + Rational(i));
        gs.push_back(std::move(g));
    }
    return SpectralConfig(std::move(gs), q, truncation);
}

void SpectralConfig::validate(int maxDegree) const {
    if (groups_.empty()) throw ConfigError("no spectral groups given");
    if (q_.is_zero() || q_ == Rational(1) || q_ == Rational(-1))
        throw ConfigError("q must not be 0, 1 or -1");
    if (n_ > maxDegree)
        throw ConfigError("total degree " + std::to_string(n_) + " exceeds cap " + std::to_string(maxDegree) +
                          " (raise --max-degree)");
    Rational q2 = q_ * q_;
    for (std::size_t s = 0; s < groups_.size(); ++s) {
        const auto& g = groups_[s];
        if (g.n < 1) throw ConfigError("group multiplicity must be >= 1");
        if (g.a.is_zero()) throw ConfigError("spectral parameter must be nonzero");
        if (static_cast<int>(g.alphas.size()) != g.n)
            throw ConfigError("group needs exactly n deformation slopes");
        for (std::size_t i = 0; i < g.alphas.size(); ++i) {
            if (g.alphas[i].is_zero())
                throw ConfigError("deformation slope alpha = 0 (pick another --alpha-seed)");
            for (std::size_t j = i + 1; j < g.alphas.size(); ++j)
                if (g.alphas[i] == g.alphas[j]) throw ConfigError("deformation slopes must be distinct");
        }
        for (std::size_t t = s + 1; t < groups_.size(); ++t) {
            if (g.a == groups_[t].a) throw ConfigError("duplicate spectral parameter across groups");
            // ordering constraint of the tensor definition: a ratio of q^2
            // in either direction is rejected outright
            if (g.a == q2 * groups_[t].a || groups_[t].a == q2 * g.a)
                throw ConfigError("roots " + (g.a / q_).str() + " and " + (groups_[t].a / q_).str() +
                                  " have ratio q^2 = " + q2.str() +
                                  "; the tensor-ordering constraint cannot be satisfied");
        }
    }
}

int SpectralConfig::group_of_position(int p) const {
    int s = 0;
    while (s + 1 < num_groups() && p > offsets_[static_cast<std::size_t>(s + 1)]) ++s;
    return s;
}

int SpectralConfig::local_index(int p) const { return p - offsets_[static_cast<std::size_t>(group_of_position(p))]; }

EpsPoly SpectralConfig::a_poly(int p) const {
    int s = group_of_position(p);
    int i = p - offsets_[static_cast<std::size_t>(s)];
    const auto& g = groups_[static_cast<std::size_t>(s)];
    if (specialized_) return EpsPoly(g.a + eps0_ * g.alphas[static_cast<std::size_t>(i - 1)]);
    return EpsPoly(std::vector<Rational>{g.a, g.alphas[static_cast<std::size_t>(i - 1)]});
}

SpectralConfig SpectralConfig::specialized(const Rational& eps0) const {
    if (!epsilon_valid(eps0))
        throw ConfigError("specialization at eps=" + eps0.str() + " gives coincident or zero spectral values");
    SpectralConfig out = *this;
    out.specialized_ = true;
    out.eps0_ = eps0;
    return out;
}

const Rational& SpectralConfig::a_limit(int p) const {
    return groups_[static_cast<std::size_t>(group_of_position(p))].a;
}

Rational SpectralConfig::a_at(int p, const Rational& eps0) const {
    int s = group_of_position(p);
    int i = p - offsets_[static_cast<std::size_t>(s)];
    const auto& g = groups_[static_cast<std::size_t>(s)];
    return g.a + eps0 * g.alphas[static_cast<std::size_t>(i - 1)];
}

bool SpectralConfig::epsilon_valid(const Rational& eps0) const {
    if (eps0.is_zero()) return false;
    std::vector<Rational> vals;
    for (int p = 1; p <= n_; ++p) vals.push_back(a_at(p, eps0));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i].is_zero()) return false;
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i] == vals[j]) return false;
    }
    return true;
}

std::vector<EpsPoly> SpectralConfig::drinfeld_poly() const {
    std::vector<EpsPoly> poly{EpsPoly(1)};
    Rational qi = q_.inv();
    for (int p = 1; p <= n_; ++p) {
        // multiply by (1 - a_p q^{-1} u)
        EpsPoly lin = a_poly(p).scaled(-qi);
        std::vector<EpsPoly> next(poly.size() + 1, EpsPoly());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * lin;
        }
        poly = std::move(next);
    }
    return poly;
}

std::string SpectralConfig::str() const {
    std::ostringstream os;
    os << "q=" << q_.str() << " R=" << R_ << " groups:";
    for (const auto& g : groups_) os << " (a=" << g.a.str() << ", n=" << g.n << ")";
    return os.str();
}

std::string BasisElement::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "x";
        s += parts[i].str();
    }
    return s;
}

TupleBasis::TupleBasis(const SpectralConfig& cfg) : cfg_(&cfg) {
    std::vector<BasisElement> elems;
    std::vector<Subset> cur;

    // enumerate all subset tuples
    struct Rec {
        const SpectralConfig& cfg;
        std::vector<Subset>& cur;
        std::vector<BasisElement>& out;
        void go(int s) {
            if (s == cfg.num_groups()) {
                BasisElement e;
                e.parts = cur;
                e.sizes.reserve(cur.size());
                for (std::size_t g = 0; g < cur.size(); ++g) {
                    const Subset& A = cur[g];
                    e.sizes.push_back(A.size());
                    e.total_size += A.size();
                    e.grade += lambda_of(A).weight();
                    e.flat |= A.mask() << cfg.group_offset(static_cast<int>(g));
                }
                out.push_back(std::move(e));
                return;
            }
            int ns = cfg.groups()[static_cast<std::size_t>(s)].n;
            std::uint64_t full = Subset::full(ns).mask();
            for (std::uint64_t m = 0; m <= full; ++m) {
                cur.emplace_back(ns, m);
                go(s + 1);
                cur.pop_back();
            }
        }
    };
    Rec rec{cfg, cur, elems};
    rec.go(0);

    std::sort(elems.begin(), elems.end(), [](const BasisElement& x, const BasisElement& y) {
        if (x.total_size != y.total_size) return x.total_size < y.total_size;
        if (x.sizes != y.sizes) return x.sizes < y.sizes;
        if (x.grade != y.grade) return x.grade < y.grade;
        return x.flat < y.flat;
    });
    elems_ = std::move(elems);
    for (int i = 0; i < dim(); ++i) {
        flat_index_[elems_[static_cast<std::size_t>(i)].flat] = i;
        sectors_[elems_[static_cast<std::size_t>(i)].sizes].push_back(i);
        if (elems_[static_cast<std::size_t>(i)].flat == 0) empty_ = i;
    }
}

int TupleBasis::index_of_flat(std::uint64_t flat) const {
    auto it = flat_index_.find(flat);
    if (it == flat_index_.end()) throw std::out_of_range("TupleBasis: unknown flat mask");
    return it->second;
}

int TupleBasis::index_of(const std::vector<Subset>& parts) const {
    std::uint64_t flat = 0;
    for (std::size_t g = 0; g < parts.size(); ++g)
        flat |= parts[g].mask() << cfg_->group_offset(static_cast<int>(g));
    return index_of_flat(flat);
}

const std::vector<int>& TupleBasis::sector(const std::vector<int>& sizes) const {
    auto it = sectors_.find(sizes);
    if (it == sectors_.end()) throw std::out_of_range("TupleBasis: unknown sector");
    return it->second;
}

} // namespace qloop
