#include "qloop/vmodule.hpp"

#include <optional>
#include <sstream>

#include "qloop/errors.hpp"
#include "qloop/exact_rank.hpp"
#include "qloop/hall_littlewood.hpp"
#include "qloop/parallel.hpp"

namespace qloop {

namespace {

EpsRatFun a_pow(const EpsPoly& a, int t) {
    if (t >= 0) return EpsRatFun(a.pow(t));
    return EpsRatFun(EpsPoly(1), a.pow(-t));
}

std::vector<int> flat_elements(std::uint64_t flat, int n) {
    std::vector<int> out;
    for (int p = 1; p <= n; ++p)
        if ((flat >> (p - 1)) & 1) out.push_back(p);
    return out;
}

} // namespace

VModule::VModule(const SpectralConfig& cfg, const TupleBasis& basis) : cfg_(&cfg), basis_(&basis) {}

ModeMatrix VModule::xplus_mode(int t) const {
    const int n = cfg_->total_n();
    ModeMatrix out(basis_->dim(), basis_->dim());
    Rational q = cfg_->q(), qi = q.inv();
    for (int col = 0; col < basis_->dim(); ++col) {
        const auto& e = basis_->at(col);
        for (int j : flat_elements(e.flat, n)) {
            EpsPoly aj = cfg_->a_poly(j);
            EpsRatFun coeff = a_pow(aj, t);
            for (int k = 1; k <= n; ++k) {
                if ((e.flat >> (k - 1)) & 1) continue;
                EpsPoly ak = cfg_->a_poly(k);
                coeff *= EpsRatFun(aj.scaled(q) - ak.scaled(qi), aj - ak);
            }
            int row = basis_->index_of_flat(e.flat & ~(1ull << (j - 1)));
            out.add(row, col, coeff);
        }
    }
    return out;
}

ModeMatrix VModule::xminus_mode(int t) const {
    const int n = cfg_->total_n();
    ModeMatrix out(basis_->dim(), basis_->dim());
    Rational q = cfg_->q(), qi = q.inv();
    for (int col = 0; col < basis_->dim(); ++col) {
        const auto& e = basis_->at(col);
        for (int j = 1; j <= n; ++j) {
            if ((e.flat >> (j - 1)) & 1) continue;
            EpsPoly aj = cfg_->a_poly(j);
            EpsRatFun coeff = a_pow(aj, t);
            for (int k : flat_elements(e.flat, n)) {
                EpsPoly ak = cfg_->a_poly(k);
                coeff *= EpsRatFun(ak.scaled(q) - aj.scaled(qi), ak - aj);
            }
            int row = basis_->index_of_flat(e.flat | (1ull << (j - 1)));
            out.add(row, col, coeff);
        }
    }
    return out;
}

BasicUSeries<EpsRatFun> VModule::phi_series_on(int basisIndex, SeriesSign sign, int order) const {
    const int n = cfg_->total_n();
    if (order < 0) order = cfg_->truncation();
    const auto& e = basis_->at(basisIndex);
    Rational q = cfg_->q(), qi = q.inv();
    auto acc = BasicUSeries<EpsRatFun>::constant(EpsRatFun(Rational(1)), sign, order);
    for (int j = 1; j <= n; ++j) {
        EpsPoly aj = cfg_->a_poly(j);
        bool in = (e.flat >> (j - 1)) & 1;
        acc *= BasicUSeries<EpsRatFun>::from_rational(
            {EpsRatFun(in ? qi : q), EpsRatFun(aj.scaled(in ? -q : -qi))},
            {EpsRatFun(Rational(1)), EpsRatFun(-aj)}, sign, order);
    }
    return acc;
}

ModeMatrix VModule::phi_mode(SeriesSign sign, int r) const {
    if (r < 0 || r > cfg_->truncation())
        throw std::domain_error("phi_mode: mode index out of truncation range");
    ModeMatrix out(basis_->dim(), basis_->dim());
    for (int i = 0; i < basis_->dim(); ++i) out.set(i, i, phi_series_on(i, sign, r).mode(r));
    return out;
}

ModeMatrix VModule::phi_mode_at(SeriesSign sign, int s) const {
    if (sign == SeriesSign::Plus) {
        if (s < 0) return ModeMatrix(basis_->dim(), basis_->dim());
        return phi_mode(sign, s);
    }
    if (s > 0) return ModeMatrix(basis_->dim(), basis_->dim());
    return phi_mode(sign, -s);
}

SparseMat<Rational> VModule::specialize(const ModeMatrix& m, const Rational& eps0) {
    return m.mapped([&](const EpsRatFun& f) { return f.eval_at(eps0); });
}

namespace {

std::string residual_str(const TupleBasis& basis, const ModeMatrix& resid) {
    int r = 0, c = 0;
    EpsRatFun v;
    if (!resid.first_nonzero(r, c, v)) return "";
    std::ostringstream os;
    os << "residual[" << basis.at(r).str() << " <- " << basis.at(c).str() << "] = " << v.str();
    return os.str();
}

struct RelationCheck {
    std::string name;
    ModeMatrix residual;
};

} // namespace

Report verify_relations(const VModule& mod, int window, const Rational* eps0) {
    const SpectralConfig& cfg = mod.cfg();
    if (window < 1 || 2 * window > cfg.truncation())
        throw std::domain_error("verify_relations: need 1 <= window and 2*window <= truncation order");
    // a specialized run builds its matrices at frozen eps: entries are plain
    // rationals, so products and reductions are cheap
    std::optional<SpectralConfig> specCfg;
    std::optional<TupleBasis> specBasis;
    std::optional<VModule> specMod;
    const VModule* work = &mod;
    if (eps0) {
        specCfg.emplace(cfg.specialized(*eps0));
        specBasis.emplace(*specCfg);
        specMod.emplace(*specCfg, *specBasis);
        work = &*specMod;
    }

    Rational q = cfg.q(), qi = q.inv();
    Rational q2 = q * q, qi2 = qi * qi;
    EpsRatFun comm_scale(Rational(1) / (q - qi));

    // precompute mode matrices
    std::map<int, ModeMatrix> xp, xm;
    for (int t = -window - 1; t <= window + 1; ++t) {
        xp.emplace(t, work->xplus_mode(t));
        xm.emplace(t, work->xminus_mode(t));
    }
    int phiMax = 2 * window;
    std::map<int, ModeMatrix> phip, phim; // by power of u; minus modes keyed by s <= 0
    ModeMatrix zero(mod.basis().dim(), mod.basis().dim());
    for (int s = -phiMax - 1; s <= phiMax + 1; ++s) {
        phip.emplace(s, s >= 0 && s <= phiMax ? work->phi_mode(SeriesSign::Plus, s) : zero);
        phim.emplace(s, s <= 0 && -s <= phiMax ? work->phi_mode(SeriesSign::Minus, -s) : zero);
    }
    auto phi = [&](SeriesSign sign, int s) -> const ModeMatrix& {
        return sign == SeriesSign::Plus ? phip.at(s) : phim.at(s);
    };
    // all phi modes in the window, for the pairwise commutation check
    std::vector<std::pair<std::string, const ModeMatrix*>> phiAll;
    for (int s = 0; s <= phiMax; ++s) phiAll.emplace_back("phi+_" + std::to_string(s), &phip.at(s));
    for (int s = 0; s <= phiMax; ++s) phiAll.emplace_back("phi-_" + std::to_string(-s), &phim.at(-s));

    // enumerate all (relation, index) tasks
    struct Task {
        std::string name;
        int kind; // 1..5
        SeriesSign sign;
        int a, b;
    };
    std::vector<Task> tasks;
    auto nm = [](const std::string& base, SeriesSign sg, int a, int b) {
        std::ostringstream os;
        os << base << "[" << series_sign_name(sg) << "; " << a << "," << b << "]";
        return os.str();
    };
    // (i) all phi modes commute pairwise, across signs as well
    for (std::size_t i = 0; i < phiAll.size(); ++i)
        for (std::size_t j = i + 1; j < phiAll.size(); ++j)
            tasks.push_back({"phi-commute[" + phiAll[i].first + "," + phiAll[j].first + "]", 1, SeriesSign::Plus,
                             static_cast<int>(i), static_cast<int>(j)});
    // (ii) exchange relations, both phi signs, both x currents
    for (int a = -window; a <= window; ++a)
        for (int b = -window; b <= window; ++b) {
            tasks.push_back({nm("phi-xplus", SeriesSign::Plus, a, b), 2, SeriesSign::Plus, a, b});
            tasks.push_back({nm("phi-xplus", SeriesSign::Minus, a, b), 2, SeriesSign::Minus, a, b});
            tasks.push_back({nm("phi-xminus", SeriesSign::Plus, a, b), 3, SeriesSign::Plus, a, b});
            tasks.push_back({nm("phi-xminus", SeriesSign::Minus, a, b), 3, SeriesSign::Minus, a, b});
        }
    // (iii) x+ x- commutator
    for (int m = -window; m <= window; ++m)
        for (int k = -window; k <= window; ++k)
            tasks.push_back({nm("xp-xm-commutator", SeriesSign::Plus, m, k), 4, SeriesSign::Plus, m, k});
    // (iv) Serre-type xx exchange
    for (int m = -window; m <= window; ++m)
        for (int k = -window; k <= window; ++k) {
            tasks.push_back({nm("xx-exchange", SeriesSign::Plus, m, k), 5, SeriesSign::Plus, m, k});
            tasks.push_back({nm("xx-exchange", SeriesSign::Minus, m, k), 5, SeriesSign::Minus, m, k});
        }

    std::vector<CheckItem> results(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        ModeMatrix resid;
        switch (t.kind) {
            case 1: {
                const ModeMatrix& A = *phiAll[static_cast<std::size_t>(t.a)].second;
                const ModeMatrix& B = *phiAll[static_cast<std::size_t>(t.b)].second;
                resid = A * B - B * A;
                break;
            }
            case 2: {
                // q^{-1} phi_a x+_b - q phi_{a-1} x+_{b+1} = q x+_b phi_a - q^{-1} x+_{b+1} phi_{a-1}
                const ModeMatrix &pa = phi(t.sign, t.a), &pam = phi(t.sign, t.a - 1);
                const ModeMatrix &xb = xp.at(t.b), &xb1 = xp.at(t.b + 1);
                resid = (pa * xb).scaled(EpsRatFun(qi)) - (pam * xb1).scaled(EpsRatFun(q)) -
                        (xb * pa).scaled(EpsRatFun(q)) + (xb1 * pam).scaled(EpsRatFun(qi));
                break;
            }
            case 3: {
                // q phi_a x-_b - q^{-1} phi_{a-1} x-_{b+1} = q^{-1} x-_b phi_a - q x-_{b+1} phi_{a-1}
                const ModeMatrix &pa = phi(t.sign, t.a), &pam = phi(t.sign, t.a - 1);
                const ModeMatrix &xb = xm.at(t.b), &xb1 = xm.at(t.b + 1);
                resid = (pa * xb).scaled(EpsRatFun(q)) - (pam * xb1).scaled(EpsRatFun(qi)) -
                        (xb * pa).scaled(EpsRatFun(qi)) + (xb1 * pam).scaled(EpsRatFun(q));
                break;
            }
            case 4: {
                const ModeMatrix &a = xp.at(t.a), &b = xm.at(t.b);
                int s = t.a + t.b;
                resid = a * b - b * a - (phip.at(s) - phim.at(s)).scaled(comm_scale);
                break;
            }
            case 5: {
                bool plus = t.sign == SeriesSign::Plus;
                const auto& X = plus ? xp : xm;
                const Rational& qq = plus ? q2 : qi2;
                const ModeMatrix &x_m = X.at(t.a), &x_m1 = X.at(t.a + 1);
                const ModeMatrix &x_k = X.at(t.b), &x_k1 = X.at(t.b + 1);
                resid = x_m1 * x_k - (x_m * x_k1).scaled(EpsRatFun(qq)) - (x_k * x_m1).scaled(EpsRatFun(qq)) +
                        x_k1 * x_m;
                break;
            }
            default:
                break;
        }
        bool ok = resid.is_zero();
        results[i] = {t.name, ok, ok ? "" : residual_str(mod.basis(), resid)};
    });

    Report rep;
    rep.title = "defining relations, window " + std::to_string(window) +
                (eps0 ? " at eps=" + eps0->str() : " over Q(eps)") + " (" + cfg.str() + ")";
    for (auto& r : results) rep.items.push_back(std::move(r));
    return rep;
}

Report verify_relation_xx_commutator(const VModule& mod, const ModeMatrix& xpM, const ModeMatrix& xmM, int m,
                                     int k) {
    const SpectralConfig& cfg = mod.cfg();
    Rational q = cfg.q(), qi = q.inv();
    int s = m + k;
    ModeMatrix php = s >= 0 ? mod.phi_mode(SeriesSign::Plus, s) : ModeMatrix(mod.basis().dim(), mod.basis().dim());
    ModeMatrix phm = s <= 0 ? mod.phi_mode(SeriesSign::Minus, -s) : ModeMatrix(mod.basis().dim(), mod.basis().dim());
    ModeMatrix resid = xpM * xmM - xmM * xpM - (php - phm).scaled(EpsRatFun(Rational(1) / (q - qi)));
    Report rep;
    rep.title = "x+ x- commutator with supplied matrices";
    bool ok = resid.is_zero();
    rep.add("xp-xm-commutator[" + std::to_string(m) + "," + std::to_string(k) + "]", ok,
            ok ? "" : residual_str(mod.basis(), resid));
    return rep;
}

Report verify_highest_weight(const VModule& mod, const Rational& eps0) {
    const SpectralConfig& cfg = mod.cfg();
    const TupleBasis& basis = mod.basis();
    Report rep;
    rep.title = "highest l-weight (" + cfg.str() + ")";
    const int R = cfg.truncation();
    const int n = cfg.total_n();
    int vEmpty = basis.empty_index();

    // (i) x^+_t V_empty = 0
    bool killed = true;
    for (int t = -R; t <= R; ++t) {
        ModeMatrix x = mod.xplus_mode(t);
        for (int r = 0; r < basis.dim(); ++r)
            if (!x.get(r, vEmpty).is_zero()) killed = false;
    }
    rep.add("x+ annihilates V_empty for |t| <= R", killed);

    // (ii) eigenvalue series on V_empty = q^{deg P} P(u q^{-1}) / P(u q),
    // the Drinfel'd side expanded factor by factor: prod_i q (1 - a_i q^{-2} u) / (1 - a_i u)
    Rational q = cfg.q(), qi = q.inv();
    Rational qm2 = qi * qi;
    for (SeriesSign sign : {SeriesSign::Plus, SeriesSign::Minus}) {
        auto expect = BasicUSeries<EpsRatFun>::constant(EpsRatFun(Rational(1)), sign, R);
        for (int p = 1; p <= n; ++p) {
            EpsPoly ap = cfg.a_poly(p);
            expect *= BasicUSeries<EpsRatFun>::from_rational({EpsRatFun(q), EpsRatFun(ap.scaled(-q * qm2))},
                                                             {EpsRatFun(Rational(1)), EpsRatFun(-ap)}, sign, R);
        }
        auto got = mod.phi_series_on(vEmpty, sign);
        rep.add(std::string("phi^") + series_sign_name(sign) + " series on V_empty equals q^degP P(uq^-1)/P(uq)",
                got == expect);
    }

    // (iii) lowering words span every weight sector at specialized eps
    if (!cfg.epsilon_valid(eps0)) throw ConfigError("verify_highest_weight: eps0 gives coincident spectral values");
    std::map<int, SparseMat<Rational>> xmLow;
    for (int t = 0; t < n; ++t) xmLow.emplace(t, VModule::specialize(mod.xminus_mode(t), eps0));
    // words indexed by weakly increasing mode tuples
    std::map<int, std::vector<std::vector<Rational>>> sectorVectors;
    std::vector<Rational> start(static_cast<std::size_t>(basis.dim()), Rational(0));
    start[static_cast<std::size_t>(vEmpty)] = Rational(1);
    struct Rec {
        const std::map<int, SparseMat<Rational>>& xm;
        std::map<int, std::vector<std::vector<Rational>>>& out;
        int n;
        void go(const std::vector<Rational>& v, int depth, int minMode) {
            out[depth].push_back(v);
            if (depth == n) return;
            for (int t = minMode; t < n; ++t) go(xm.at(t).apply(v), depth + 1, t);
        }
    };
    Rec rec{xmLow, sectorVectors, n};
    rec.go(start, 0, 0);
    bool spans = true;
    std::string detail;
    for (int m = 0; m <= n; ++m) {
        const auto& vecs = sectorVectors[m];
        SparseMat<Rational> stack(static_cast<int>(vecs.size()), basis.dim());
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (int c = 0; c < basis.dim(); ++c)
                if (!vecs[i][static_cast<std::size_t>(c)].is_zero())
                    stack.set(static_cast<int>(i), c, vecs[i][static_cast<std::size_t>(c)]);
        int want = 0; // total dimension of weight-m sectors
        for (const auto& [sizes, idxs] : basis.sectors()) {
            int tot = 0;
            for (int s : sizes) tot += s;
            if (tot == m) want += static_cast<int>(idxs.size());
        }
        int got = exact_rank(stack);
        if (got != want) {
            spans = false;
            detail = "weight " + std::to_string(m) + ": rank " + std::to_string(got) + " != " + std::to_string(want);
        }
    }
    rep.add("lowering words span the module (rank per weight sector)", spans, detail);
    return rep;
}

Report verify_lowering_identity(const VModule& mod, const std::vector<long>& tau, const Rational& eps0) {
    const SpectralConfig& cfg = mod.cfg();
    const TupleBasis& basis = mod.basis();
    if (static_cast<int>(tau.size()) > cfg.total_n())
        throw std::domain_error("verify_lowering_identity: |tau| must be <= n");
    if (!cfg.epsilon_valid(eps0))
        throw ConfigError("verify_lowering_identity: eps0 gives coincident spectral values");
    Report rep;
    rep.title = "lowering identity";
    const int n = cfg.total_n();

    std::vector<Rational> v(static_cast<std::size_t>(basis.dim()), Rational(0));
    v[static_cast<std::size_t>(basis.empty_index())] = Rational(1);
    for (long t : tau) v = VModule::specialize(mod.xminus_mode(static_cast<int>(t)), eps0).apply(v);

    // the mode applied first enters the symmetrized kernel as the last
    // exponent: applying tau_1, ..., tau_m in sequence matches
    // R_{(tau_m, ..., tau_1)}
    std::vector<long> tauRev(tau.rbegin(), tau.rend());

    bool ok = true;
    std::string detail;
    std::size_t m = tau.size();
    for (int i = 0; i < basis.dim(); ++i) {
        const auto& e = basis.at(i);
        Rational expect(0);
        if (e.total_size == static_cast<int>(m)) {
            std::vector<Rational> aB;
            for (int p = 1; p <= n; ++p)
                if ((e.flat >> (p - 1)) & 1) aB.push_back(cfg.a_at(p, eps0));
            expect = hall_littlewood_R(tauRev, aB, cfg.q());
        }
        if (v[static_cast<std::size_t>(i)] != expect) {
            ok = false;
            detail = "coefficient of " + e.str() + ": got " + v[static_cast<std::size_t>(i)].str() + ", expected " +
                     expect.str();
            break;
        }
    }
    std::string tname = "(";
    for (std::size_t i = 0; i < tau.size(); ++i) tname += (i ? "," : "") + std::to_string(tau[i]);
    tname += ")";
    rep.add("x^- word tau=" + tname + " matches sum_B R_tau(a_B) V_B", ok, detail);
    return rep;
}

} // namespace qloop
