#include "qloop/cli.hpp"

#include <json.hpp>

#include "qloop/coincident.hpp"
#include "qloop/errors.hpp"
#include "qloop/jordan.hpp"
#include "qloop/qtchar.hpp"
#include "qloop/vmodule.hpp"

namespace qloop::cli {

using nlohmann::json;

std::vector<std::pair<Rational, int>> parse_roots(const std::string& spec) {
    if (spec.empty()) throw ConfigError("empty roots spec");
    std::vector<std::pair<Rational, int>> roots;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw ConfigError("empty entry in roots spec");
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ConfigError("roots entry '" + item + "' must be '<rational>:<multiplicity>'");
        Rational a = Rational::parse(item.substr(0, colon));
        std::string multStr = item.substr(colon + 1);
        int mult = 0;
        try {
            std::size_t used = 0;
            mult = std::stoi(multStr, &used);
            if (used != multStr.size()) throw std::invalid_argument(multStr);
        } catch (const std::exception&) {
            throw ConfigError("bad multiplicity '" + multStr + "' in roots spec");
        }
        if (mult < 1) throw ConfigError("multiplicity must be >= 1 in roots spec");
        if (a.is_zero()) throw ConfigError("Drinfel'd roots must be nonzero");
        for (const auto& [b, m] : roots)
            if (a == b) throw ConfigError("duplicate root " + a.str() + "; merge multiplicities instead");
        roots.emplace_back(a, mult);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return roots;
}

SpectralConfig make_spectral(const RunConfig& rc) {
    if (rc.window < 1) throw ConfigError("window must be >= 1");
    int n = 0;
    for (const auto& [a, m] : rc.roots) n += m;
    int R = rc.truncation >= 0 ? std::max(rc.truncation, 2 * rc.window) : std::max(2 * n + 2, 2 * rc.window);
    SpectralConfig cfg = SpectralConfig::from_roots(rc.roots, rc.q, R, rc.alphaSeed);
    cfg.validate(rc.maxDegree);
    return cfg;
}

void render_report(const Report& rep, Format format, const std::string& schema, std::ostream& out) {
    if (format == Format::Json) {
        json j;
        j["schema"] = schema;
        j["title"] = rep.title;
        j["pass"] = rep.all_pass();
        j["checks"] = json::array();
        for (const auto& it : rep.items) {
            json c;
            c["name"] = it.name;
            c["pass"] = it.pass;
            if (!it.detail.empty()) c["detail"] = it.detail;
            j["checks"].push_back(c);
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "== " << rep.title << " ==\n";
    for (const auto& it : rep.items) {
        out << (it.pass ? "PASS" : "FAIL") << "  " << it.name;
        if (!it.detail.empty()) out << "  [" << it.detail << "]";
        out << "\n";
    }
    out << (rep.all_pass() ? "all checks passed" : std::to_string(rep.failures()) + " check(s) FAILED") << "\n";
}

namespace {

json monomial_json(const YMonomial& m) {
    json exps = json::array();
    for (const auto& [a, e] : m.exponents()) exps.push_back(json::array({a.str(), e}));
    return exps;
}

json tpoly_json(const TPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).get_si());
    if (p.is_zero()) arr.push_back(0);
    return arr;
}

int guarded(const RunConfig& rc, std::ostream& out, int (*body)(const RunConfig&, std::ostream&)) {
    try {
        return body(rc, out);
    } catch (const ConfigError& e) {
        if (rc.format == Format::Json) {
            json j;
            j["schema"] = "qloop.error.v1";
            j["error"] = e.what();
            out << j.dump(2) << "\n";
        } else {
            out << "config error: " << e.what() << "\n";
        }
        return 2;
    }
}

int relations_body(const RunConfig& rc, std::ostream& out) {
    SpectralConfig cfg = make_spectral(rc);
    TupleBasis basis(cfg);
    VModule mod(cfg, basis);
    Report rep = verify_relations(mod, rc.window);
    render_report(rep, rc.format, "qloop.report.v1", out);
    return rep.all_pass() ? 0 : 1;
}

// identities in the eps-function field are expensive on large coincident
// configs; verify falls back to a distinct-value specialization there
const Rational kEpsOne(1);

const Rational* relation_specialization(const SpectralConfig& cfg) {
    bool coincident = false;
    for (const auto& g : cfg.groups())
        if (g.n > 1) coincident = true;
    if (!coincident || cfg.total_n() <= 4) return nullptr;
    return &kEpsOne;
}

int qchar_body(const RunConfig& rc, std::ostream& out) {
    SpectralConfig cfg = make_spectral(rc); // validates roots and q
    QChar qc = qchar_standard(roots_of(cfg), cfg.q());
    if (rc.format == Format::Json) {
        json j;
        j["schema"] = "qloop.qchar.v1";
        j["monomials"] = json::array();
        for (const auto& [m, mult] : qc) {
            json e;
            e["exponents"] = monomial_json(m);
            e["multiplicity"] = mult.get_si();
            j["monomials"].push_back(e);
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [m, mult] : qc) out << m.str() << " : " << mult.get_str() << "\n";
    }
    return 0;
}

int qtchar_body(const RunConfig& rc, std::ostream& out) {
    SpectralConfig cfg = make_spectral(rc);
    QTChar qt = qtchar_standard(roots_of(cfg), cfg.q());
    if (rc.format == Format::Json) {
        json j;
        j["schema"] = "qloop.qtchar.v1";
        j["monomials"] = json::array();
        for (const auto& [m, poly] : qt) {
            json e;
            e["exponents"] = monomial_json(m);
            e["tpoly"] = tpoly_json(poly);
            j["monomials"].push_back(e);
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [m, poly] : qt) out << m.str() << " : " << poly.str() << "\n";
    }
    return 0;
}

int jordan_body(const RunConfig& rc, std::ostream& out) {
    SpectralConfig cfg = make_spectral(rc);
    CoincidentModule mod{cfg};
    auto roots = roots_of(cfg);
    json sectors = json::array();
    bool text = rc.format == Format::Text;
    if (text) out << "sector : dim : chains : grade dims\n";
    for (const auto& [sizes, idxs] : mod.basis().sectors()) {
        LWeightSpace space(mod.basis(), sizes);
        JordanProfile prof = jordan_oracle(psi_mode(mod, space, SeriesSign::Plus, 1));
        if (text) {
            std::string key;
            for (std::size_t i = 0; i < sizes.size(); ++i) key += (i ? "," : "") + std::to_string(sizes[i]);
            out << "(" << key << ") : " << space.dim() << " : ";
            for (std::size_t i = 0; i < prof.chain_lengths.size(); ++i)
                out << (i ? "," : "") << prof.chain_lengths[i];
            out << " : ";
            for (std::size_t i = 0; i < prof.grade_dims.size(); ++i) out << (i ? "," : "") << prof.grade_dims[i];
            out << "\n";
        } else {
            json s;
            s["sizes"] = sizes;
            s["monomial"] = monomial_json(sector_monomial(roots, cfg.q(), sizes));
            s["dim"] = space.dim();
            s["chains"] = prof.chain_lengths;
            s["grade_dims"] = prof.grade_dims;
            sectors.push_back(s);
        }
    }
    if (!text) {
        json j;
        j["schema"] = "qloop.jordan.v1";
        j["sectors"] = sectors;
        out << j.dump(2) << "\n";
    }
    return 0;
}

int verify_body(const RunConfig& rc, std::ostream& out) {
    SpectralConfig cfg = make_spectral(rc);
    CoincidentModule mod{cfg};
    Report all;
    all.title = "full verification (" + cfg.str() + ")";

    Report rel = verify_relations(mod.vmodule(), rc.window, relation_specialization(cfg));
    all.add("defining relations (" + std::to_string(rel.items.size()) + " identities)", rel.all_pass());
    if (!rel.all_pass())
        for (const auto& it : rel.items)
            if (!it.pass) all.items.push_back(it);

    Report hw = verify_highest_weight(mod.vmodule());
    all.merge(hw);

    const int n = cfg.total_n();
    std::vector<std::vector<long>> taus{{}, {0}, {1}};
    if (n >= 2) {
        taus.push_back({0, 0});
        taus.push_back({0, 1});
    }
    if (n >= 3) taus.push_back({0, 1, 2});
    for (const auto& tau : taus) {
        if (static_cast<int>(tau.size()) > n) continue;
        all.merge(verify_lowering_identity(mod.vmodule(), tau));
    }

    all.merge(verify_limit_consistency(mod, rc.window));
    all.merge(verify_theorem_THX(mod, rc.window));
    all.merge(verify_theorem_TH(mod));

    render_report(all, rc.format, "qloop.report.v1", out);
    return all.all_pass() ? 0 : 1;
}

} // namespace

int cmd_relations(const RunConfig& rc, std::ostream& out) { return guarded(rc, out, relations_body); }
int cmd_qchar(const RunConfig& rc, std::ostream& out) { return guarded(rc, out, qchar_body); }
int cmd_qtchar(const RunConfig& rc, std::ostream& out) { return guarded(rc, out, qtchar_body); }
int cmd_jordan(const RunConfig& rc, std::ostream& out) { return guarded(rc, out, jordan_body); }
int cmd_verify(const RunConfig& rc, std::ostream& out) { return guarded(rc, out, verify_body); }

} // namespace qloop::cli
