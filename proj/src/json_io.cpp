#include "ghecke/json_io.hpp"

#include <sstream>

namespace ghk {

json to_json(const Cyclo& c) { return c.str(); }

json to_json(const Perm& w) {
    json out = json::array();
    for (int i = 0; i < w.size(); ++i) out.push_back(w(i) + 1);
    return out;
}

json to_json(const GroupElem& g) {
    return json{{"t", g.torsion()}, {"w", to_json(g.perm())}};
}

json to_json(const TChar& pi) { return json(pi.index()); }

json to_json(const CherElem& e) {
    json out = json::array();
    for (const auto& [k, c] : e.terms())
        out.push_back(json{{"x", k.xdeg}, {"g", to_json(k.g)}, {"y", k.ydeg}, {"c", c.str()}});
    return out;
}

json to_json(const GghaElem& e) {
    json out = json::array();
    for (const auto& [k, c] : e.terms())
        out.push_back(json{{"w", to_json(k.w)}, {"t", k.tpow}, {"d", k.ddeg}, {"c", c.str()}});
    return out;
}

json to_json(const ModuleRep& m) {
    json gens = json::array();
    for (size_t i = 0; i < m.gen_names.size(); ++i) {
        json rows = json::array();
        for (int rr = 0; rr < m.dim; ++rr) {
            json row = json::array();
            for (int cc = 0; cc < m.dim; ++cc) row.push_back(m.gen_mats[i](rr, cc).str());
            rows.push_back(std::move(row));
        }
        gens.push_back(json{{"name", m.gen_names[i]}, {"matrix", std::move(rows)}});
    }
    return json{{"dim", m.dim},
                {"basis", m.basis},
                {"generators", std::move(gens)},
                {"params", json{{"r", m.r}, {"n", m.n}, {"kbar0", m.kbar0.str()}, {"algebra", m.algebra}}}};
}

json to_json(const SimplicityReport& r) {
    json out{{"verdict", r.simple() ? "simple" : "reducible"}, {"certificate", r.certificate}};
    if (!r.factor_dims.empty()) out["composition_factor_dims"] = r.factor_dims;
    if (r.witness) {
        json v = json::array();
        for (int i = 0; i < r.witness->rows(); ++i) v.push_back((*r.witness)(i).str());
        out["witness"] = std::move(v);
        json basis = json::array();
        for (int c = 0; c < r.witness_basis.cols(); ++c) {
            json col = json::array();
            for (int i = 0; i < r.witness_basis.rows(); ++i) col.push_back(r.witness_basis(i, c).str());
            basis.push_back(std::move(col));
        }
        out["submodule_basis"] = std::move(basis);
    }
    return out;
}

json to_json(const CriterionReport& r) {
    json ps = json::array();
    for (auto [i, j] : r.p_set) ps.push_back(json::array({i + 1, j + 1}));
    json ws = json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(json{{"i", w.i + 1}, {"j", w.j + 1}, {"diff", w.diff.str()}, {"sign", w.sign}});
    return json{{"sigma", to_json(r.sigma)},
                {"sorted_char", to_json(r.sorted_char)},
                {"p_set", std::move(ps)},
                {"verdict", r.simple ? "simple" : "reducible"},
                {"witnesses", std::move(ws)}};
}

namespace {
std::string nu_str(const std::vector<Cyclo>& nu) {
    std::string s = "(";
    for (size_t i = 0; i < nu.size(); ++i) {
        if (i) s += ",";
        s += nu[i].str();
    }
    return s + ")";
}
std::string pi_str(const TChar& pi) {
    std::string s = "(";
    for (int i = 0; i < pi.n(); ++i) {
        if (i) s += ",";
        s += std::to_string(pi[i]);
    }
    return s + ")";
}
std::string factors_str(const std::vector<int>& f) {
    std::string s;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s += "+";
        s += std::to_string(f[i]);
    }
    return s;
}
}  // namespace

json to_json(const SweepSummary& s) {
    json rows = json::array();
    for (const SweepRow& row : s.rows) {
        json nu = json::array();
        for (const Cyclo& v : row.nu) nu.push_back(v.str());
        json jr{{"nu", std::move(nu)},
                {"pi", to_json(row.pi)},
                {"kbar0", row.kbar0.str()},
                {"criterion", row.criterion_simple ? "simple" : "reducible"},
                {"oracle", row.oracle == 's' ? "simple" : (row.oracle == 'r' ? "reducible" : "refused")}};
        if (!row.factors.empty()) jr["factors"] = row.factors;
        if (!row.note.empty()) jr["note"] = row.note;
        rows.push_back(std::move(jr));
    }
    return json{{"instances", s.instances},
                {"agree", s.agree},
                {"disagree", s.disagree},
                {"refused", s.refused},
                {"rows", std::move(rows)}};
}

std::string sweep_csv(const SweepSummary& s) {
    std::ostringstream os;
    os << "nu,pi,kbar0,criterion,oracle,factors\n";
    for (const SweepRow& row : s.rows) {
        os << "\"" << nu_str(row.nu) << "\",\"" << pi_str(row.pi) << "\",\"" << row.kbar0.str() << "\","
           << (row.criterion_simple ? "simple" : "reducible") << ","
           << (row.oracle == 's' ? "simple" : (row.oracle == 'r' ? "reducible" : "refused")) << ","
           << factors_str(row.factors) << "\n";
    }
    return os.str();
}

}  // namespace ghk
