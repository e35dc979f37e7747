#include "qloop/coincident.hpp"

#include <sstream>

#include "qloop/errors.hpp"
#include "qloop/pieri.hpp"

namespace qloop {

SparseMat<Rational> limit_mode(const ZChangeOfBasis& cob, const ModeMatrix& vmat) {
    const TupleBasis& basis = cob.basis();
    ModeMatrix conj = cob.Minv() * vmat * cob.M();
    SparseMat<Rational> out(conj.rows(), conj.cols());
    for (int r = 0; r < conj.rows(); ++r) {
        for (const auto& [c, v] : conj.row(r)) {
            if (v.has_pole_at_zero())
                throw LimitSingular("limit_mode: pole at eps = 0 in entry [" + basis.at(r).str() + " <- " +
                                    basis.at(c).str() + "] = " + v.str());
            out.set(r, c, v.eval_at_zero());
        }
    }
    return out;
}

CoincidentModule::CoincidentModule(SpectralConfig cfg) : cfg_(std::move(cfg)) {
    basis_ = std::make_unique<TupleBasis>(cfg_);
    vmod_ = std::make_unique<VModule>(cfg_, *basis_);
    cob_ = std::make_unique<ZChangeOfBasis>(*basis_);
}

const SparseMat<Rational>& CoincidentModule::limit_xplus(int t) const {
    std::scoped_lock lock(mu_);
    auto it = xplus_.find(t);
    if (it == xplus_.end()) it = xplus_.emplace(t, limit_mode(*cob_, vmod_->xplus_mode(t))).first;
    return it->second;
}

const SparseMat<Rational>& CoincidentModule::limit_xminus(int t) const {
    std::scoped_lock lock(mu_);
    auto it = xminus_.find(t);
    if (it == xminus_.end()) it = xminus_.emplace(t, limit_mode(*cob_, vmod_->xminus_mode(t))).first;
    return it->second;
}

const SparseMat<Rational>& CoincidentModule::limit_phi(SeriesSign sign, int r) const {
    std::scoped_lock lock(mu_);
    auto key = std::make_pair(sign == SeriesSign::Plus ? 0 : 1, r);
    auto it = phiLimit_.find(key);
    if (it == phiLimit_.end()) it = phiLimit_.emplace(key, limit_mode(*cob_, vmod_->phi_mode(sign, r))).first;
    return it->second;
}

const USeries& CoincidentModule::gamma_series(const std::vector<int>& sizes, SeriesSign sign) const {
    std::scoped_lock lock(mu_);
    auto key = std::make_pair(sizes, sign == SeriesSign::Plus ? 0 : 1);
    auto it = gammas_.find(key);
    if (it == gammas_.end()) {
        Rational q = cfg_.q(), qi = q.inv();
        std::vector<Rational> num{Rational(1)}, den{Rational(1)};
        for (std::size_t s = 0; s < cfg_.groups().size(); ++s) {
            const auto& g = cfg_.groups()[s];
            int ms = sizes[s];
            for (int i = 0; i < ms; ++i) num = poly_mul(num, {qi, -(q * g.a)});
            for (int i = 0; i < g.n - ms; ++i) num = poly_mul(num, {q, -(qi * g.a)});
            for (int i = 0; i < g.n; ++i) den = poly_mul(den, {Rational(1), -g.a});
        }
        it = gammas_.emplace(key, USeries::from_rational(num, den, sign, cfg_.truncation())).first;
    }
    return it->second;
}

Rational CoincidentModule::gamma_mode(const std::vector<int>& sizes, SeriesSign sign, int r) const {
    return gamma_series(sizes, sign).mode(r);
}

namespace {

USeries strip_weight_series(const Rational& q, const Rational& a, bool vertical, SeriesSign sign, int order) {
    Rational qi = q.inv();
    // phi_in: -qu / (q^-1 - q a u);  phi_wh: q^-1 u / (q - q^-1 a u)
    std::vector<Rational> num, den;
    if (vertical) {
        num = {Rational(0), -q};
        den = {qi, -(q * a)};
    } else {
        num = {Rational(0), qi};
        den = {q, -(qi * a)};
    }
    return USeries::from_rational(num, den, sign, order);
}

} // namespace

std::vector<SparseMat<Rational>> CoincidentModule::build_strip_ops(SeriesSign sign, bool vertical) const {
    const int R = cfg_.truncation();
    const int d = basis_->dim();
    std::vector<SparseMat<Rational>> ops(static_cast<std::size_t>(R) + 1, SparseMat<Rational>(d, d));
    const auto& groups = cfg_.groups();
    std::size_t ng = groups.size();

    // weight series powers per group, cached up to the frame capacity
    std::vector<std::vector<USeries>> powers(ng);
    for (std::size_t s = 0; s < ng; ++s) {
        USeries w = strip_weight_series(cfg_.q(), groups[s].a, vertical, sign, R);
        int cap = groups[s].n; // strips never exceed the frame side
        powers[s].push_back(USeries::constant(Rational(1), sign, R));
        for (int t = 1; t <= cap; ++t) powers[s].push_back(powers[s].back() * w);
    }

    for (int col = 0; col < d; ++col) {
        const BasisElement& A = basis_->at(col);
        // per-group strip sizes; sign + truncates the total at R
        std::vector<int> caps(ng);
        for (std::size_t s = 0; s < ng; ++s)
            caps[s] = vertical ? max_vertical_strip(A.parts[s]) : max_horizontal_strip(A.parts[s]);

        std::vector<int> ts(ng, 0);
        std::vector<std::vector<Subset>> moves(ng);
        auto recurse = [&](auto&& self, std::size_t s, int total) -> void {
            if (s == ng) {
                USeries weight = USeries::constant(Rational(1), sign, R);
                for (std::size_t g = 0; g < ng; ++g) weight *= powers[g][static_cast<std::size_t>(ts[g])];
                // about u=0 the weight is O(u^total); about u=infinity every
                // mode can be populated
                int kstart = sign == SeriesSign::Plus ? total : 0;
                // enumerate target tuples: cartesian product of per-group moves
                std::vector<Subset> parts(ng);
                auto emit = [&](auto&& self2, std::size_t g) -> void {
                    if (g == ng) {
                        int row = basis_->index_of(parts);
                        for (int k = kstart; k <= R; ++k)
                            if (!weight.mode(k).is_zero()) ops[static_cast<std::size_t>(k)].add(row, col, weight.mode(k));
                        return;
                    }
                    for (const Subset& C : moves[g]) {
                        parts[g] = C;
                        self2(self2, g + 1);
                    }
                };
                emit(emit, 0);
                return;
            }
            int tcap = caps[s];
            if (sign == SeriesSign::Plus) tcap = std::min(tcap, R - total);
            for (int t = 0; t <= tcap; ++t) {
                moves[s] = vertical ? pieri_e(A.parts[s], t) : pieri_h(A.parts[s], t);
                if (moves[s].empty()) continue;
                ts[s] = t;
                self(self, s + 1, total + t);
            }
        };
        recurse(recurse, 0, 0);
    }
    return ops;
}

const std::vector<SparseMat<Rational>>& CoincidentModule::phi_in_ops(SeriesSign sign) const {
    std::scoped_lock lock(mu_);
    int key = sign == SeriesSign::Plus ? 0 : 1;
    auto it = inOps_.find(key);
    if (it == inOps_.end()) it = inOps_.emplace(key, build_strip_ops(sign, true)).first;
    return it->second;
}

const std::vector<SparseMat<Rational>>& CoincidentModule::phi_wh_ops(SeriesSign sign) const {
    std::scoped_lock lock(mu_);
    int key = sign == SeriesSign::Plus ? 0 : 1;
    auto it = whOps_.find(key);
    if (it == whOps_.end()) it = whOps_.emplace(key, build_strip_ops(sign, false)).first;
    return it->second;
}

SparseMat<Rational> CoincidentModule::build_phi_comb(SeriesSign sign, int r) const {
    const auto& in = phi_in_ops(sign);
    const auto& wh = phi_wh_ops(sign);
    const int d = basis_->dim();

    // gamma acts diagonally per sector of the input label
    auto gammaDiag = [&](int k) {
        SparseMat<Rational> g(d, d);
        for (int i = 0; i < d; ++i) {
            Rational v = gamma_mode(basis_->at(i).sizes, sign, k);
            if (!v.is_zero()) g.set(i, i, v);
        }
        return g;
    };

    std::vector<SparseMat<Rational>> gdiag;
    gdiag.reserve(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) gdiag.push_back(gammaDiag(k));

    SparseMat<Rational> out(d, d);
    for (int k1 = 0; k1 <= r; ++k1) {
        if (in[static_cast<std::size_t>(k1)].is_zero()) continue;
        for (int k2 = 0; k1 + k2 <= r; ++k2) {
            if (wh[static_cast<std::size_t>(k2)].is_zero()) continue;
            int k3 = r - k1 - k2;
            SparseMat<Rational> term =
                in[static_cast<std::size_t>(k1)] * (wh[static_cast<std::size_t>(k2)] * gdiag[static_cast<std::size_t>(k3)]);
            out = out + term;
        }
    }
    return out;
}

const SparseMat<Rational>& CoincidentModule::phi_combinatorial(SeriesSign sign, int r) const {
    if (r < 0 || r > cfg_.truncation())
        throw std::domain_error("phi_combinatorial: mode index out of truncation range");
    auto key = std::make_pair(sign == SeriesSign::Plus ? 0 : 1, r);
    {
        std::scoped_lock lock(mu_);
        auto it = phiComb_.find(key);
        if (it != phiComb_.end()) return it->second;
    }
    SparseMat<Rational> built = build_phi_comb(sign, r);
    std::scoped_lock lock(mu_);
    return phiComb_.emplace(key, std::move(built)).first->second;
}

USeries CoincidentModule::superdiagonal_series(const std::vector<int>& sizes, int group, SeriesSign sign) const {
    const auto& g = cfg_.groups()[static_cast<std::size_t>(group)];
    USeries win = strip_weight_series(cfg_.q(), g.a, true, sign, cfg_.truncation());
    USeries wwh = strip_weight_series(cfg_.q(), g.a, false, sign, cfg_.truncation());
    return gamma_series(sizes, sign) * (win + wwh);
}

namespace {

Rational binom_generalized(long t, int s) {
    // falling-factorial binomial: defined for any integer upper index
    Rational num(1);
    for (int i = 0; i < s; ++i) num *= Rational(BigInt(t - i));
    Rational den(1);
    for (int i = 2; i <= s; ++i) den *= Rational(i);
    return num / den;
}

// C^{-+}(r,p,t,m): upper signs for the x^- action, lower for x^+
Rational c_coefficient(int r, int p, long t, int m, bool upper, const Rational& q, const Rational& a) {
    Rational qi = q.inv();
    Rational qq = upper ? q : qi;
    Rational diff = upper ? (q - qi) : (qi - q);
    Rational total(0);
    for (int s = 0; s <= p; ++s) {
        Rational term = binom_generalized(t, s) * binom_generalized(m - r, p - s);
        if (term.is_zero()) continue;
        term *= qq.pow(r - p + s) * diff.pow(m + s - r - p);
        if ((p - s) % 2 != 0) term = -term;
        total += term;
    }
    return total * a.pow(t + m - r - p);
}

} // namespace

SparseMat<Rational> xminus_closed_form(const CoincidentModule& mod, int t) {
    const SpectralConfig& cfg = mod.cfg();
    if (cfg.num_groups() != 1) throw std::domain_error("xminus_closed_form: single-group configs only");
    const TupleBasis& basis = mod.basis();
    const int n = cfg.total_n();
    const Rational &q = cfg.q(), &a = cfg.groups()[0].a;
    SparseMat<Rational> out(basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        const Subset& A = basis.at(col).parts[0];
        int m = A.size();
        for (int p = 0; p <= n - 1; ++p) {
            int signCount = 0;
            for (int j : A.elements())
                if (j < p + 1) ++signCount;
            for (int r = 0; r <= m; ++r) {
                Rational coeff = c_coefficient(r, p, t, m, /*upper=*/true, q, a);
                if (signCount % 2 != 0) coeff = -coeff;
                if (coeff.is_zero()) continue;
                for (const Subset& E : pieri_e(A, r)) {
                    if (E.contains(p + 1)) continue; // C = E + {p+1} needs p+1 free
                    Subset C = E.with(p + 1);
                    out.add(basis.index_of({C}), col, coeff);
                }
            }
        }
    }
    return out;
}

SparseMat<Rational> xplus_closed_form(const CoincidentModule& mod, int t) {
    const SpectralConfig& cfg = mod.cfg();
    if (cfg.num_groups() != 1) throw std::domain_error("xplus_closed_form: single-group configs only");
    const TupleBasis& basis = mod.basis();
    const int n = cfg.total_n();
    const Rational &q = cfg.q(), &a = cfg.groups()[0].a;
    SparseMat<Rational> out(basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        const Subset& A = basis.at(col).parts[0];
        int mc = n - A.size(); // |complement of A|
        for (int p = 0; p <= n - 1; ++p) {
            int signCount = 0;
            for (int j : A.elements())
                if (j > n - p) ++signCount;
            for (int r = 0; r <= mc; ++r) {
                Rational coeff = c_coefficient(r, p, t, mc, /*upper=*/false, q, a);
                if ((signCount + r) % 2 != 0) coeff = -coeff;
                if (mc % 2 != 0) coeff = -coeff; // global (-1)^{|comp A|}
                if (coeff.is_zero()) continue;
                for (const Subset& H : pieri_h(A, r)) {
                    if (!H.contains(n - p)) continue; // C = H - {n-p}
                    Subset C = H.without(n - p);
                    out.add(basis.index_of({C}), col, coeff);
                }
            }
        }
    }
    return out;
}

namespace {

std::string diff_summary(const TupleBasis& basis, const SparseMat<Rational>& got, const SparseMat<Rational>& want) {
    SparseMat<Rational> d = got - want;
    if (d.is_zero()) return "agree";
    std::ostringstream os;
    os << "DISAGREE (" << d.nnz() << " differing entries):";
    int shown = 0;
    for (int r = 0; r < d.rows() && shown < 4; ++r)
        for (const auto& [c, v] : d.row(r)) {
            os << " [" << basis.at(r).str() << " <- " << basis.at(c).str() << "] limit=" << got.get(r, c).str()
               << " closed=" << want.get(r, c).str() << ";";
            if (++shown >= 4) break;
        }
    return os.str();
}

} // namespace

Report verify_limit_consistency(const CoincidentModule& mod, int window) {
    Report rep;
    rep.title = "coincident-limit consistency (" + mod.cfg().str() + ")";
    // (a) the two phi pipelines agree exactly -- any failure here is fatal
    for (SeriesSign sign : {SeriesSign::Plus, SeriesSign::Minus}) {
        for (int r = 0; r <= window; ++r) {
            const auto& viaLimit = mod.limit_phi(sign, r);
            const auto& viaPieri = mod.phi_combinatorial(sign, r);
            bool ok = viaLimit == viaPieri;
            std::string name = std::string("phi pipelines equal [") + series_sign_name(sign) + "; r=" +
                               std::to_string(r) + "]";
            rep.add(name, ok, ok ? "" : diff_summary(mod.basis(), viaLimit, viaPieri));
        }
    }
    // (b) the closed-form x action is unproven source material: compare and
    // record, never fail
    if (mod.cfg().num_groups() == 1) {
        for (int t = -window; t <= window; ++t) {
            auto dm = diff_summary(mod.basis(), mod.limit_xminus(t), xminus_closed_form(mod, t));
            rep.add("info: x^-_" + std::to_string(t) + " closed form vs limit", true, dm);
            auto dp = diff_summary(mod.basis(), mod.limit_xplus(t), xplus_closed_form(mod, t));
            rep.add("info: x^+_" + std::to_string(t) + " closed form vs limit", true, dp);
        }
    }
    return rep;
}

} // namespace qloop
