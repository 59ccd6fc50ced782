#include "ghecke/psmod.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ghk {

CChar CChar::twist(const Perm& w) const {
    CChar out;
    Perm winv = w.inverse();
    out.gamma.resize(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i) out.gamma[i] = gamma[winv(static_cast<int>(i))];
    out.mu = mu.twist(w);
    return out;
}

Cyclo CChar::value(const std::vector<int>& tpow, const std::vector<int>& ddeg) const {
    Cyclo v = mu.value(tpow);
    for (size_t i = 0; i < gamma.size(); ++i)
        for (int rep = 0; rep < ddeg[i]; ++rep) v *= gamma[i];
    return v;
}

namespace {

std::map<std::vector<int>, int> index_map(const std::vector<Perm>& basis) {
    std::map<std::vector<int>, int> out;
    for (size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i].images(), static_cast<int>(i));
    return out;
}

}  // namespace

CWeight weight_of_twist(const CChar& gt, const Perm& w) {
    CChar tw = gt.twist(w);
    CWeight cw;
    cw.dvals = tw.gamma;
    for (int i = 0; i < tw.mu.n(); ++i) cw.tvals.push_back(Cyclo::zeta_pow(tw.mu.r(), tw.mu[i]));
    return cw;
}

ModuleRep principal_series(const GghaAlgebra& alg, const CChar& gt) {
    const int n = alg.n();
    if (gt.n() != n || gt.mu.n() != n || gt.mu.r() != alg.r())
        throw std::invalid_argument("character does not match the algebra");
    std::vector<Perm> basis = symmetric_group(n);
    auto idx = index_map(basis);
    const int dim = static_cast<int>(basis.size());

    ModuleRep m;
    m.dim = dim;
    m.r = alg.r();
    m.n = n;
    m.kbar0 = alg.kbar0();
    m.algebra = "ggha";
    for (const Perm& w : basis) m.basis.push_back(w.str());

    auto action_matrix = [&](const GghaElem& gen) {
        CMat mat = czeros(dim, dim);
        for (int col = 0; col < dim; ++col) {
            GghaElem prod = alg.multiply(gen, alg.perm(basis[col]));
            for (const auto& [key, c] : prod.terms()) mat(idx.at(key.w.images()), col) += c * gt.value(key.tpow, key.ddeg);
        }
        return mat;
    };

    for (int i = 0; i < n; ++i) {
        m.gen_names.push_back("D" + std::to_string(i + 1));
        m.gen_mats.push_back(action_matrix(alg.d(i)));
    }
    for (int i = 0; i < n; ++i) {
        m.gen_names.push_back("t" + std::to_string(i + 1));
        m.gen_mats.push_back(action_matrix(alg.theta(i)));
    }
    for (int i = 0; i + 1 < n; ++i) {
        m.gen_names.push_back("s" + std::to_string(i + 1));
        m.gen_mats.push_back(action_matrix(alg.perm(Perm::simple(n, i))));
    }
    for (const Perm& w : basis) m.cweights.push_back(weight_of_twist(gt, w));
    return m;
}

std::vector<IsotypicPiece> t_isotypic(const GghaAlgebra& alg, const ModuleRep& m, const CChar& gt) {
    const int n = alg.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CMat a = m.matrix("t" + std::to_string(i + 1));
            CMat b = m.matrix("t" + std::to_string(j + 1));
            if (!is_zero(CMat(a * b - b * a))) throw std::logic_error("T-action matrices do not commute");
        }
    std::vector<Perm> basis = symmetric_group(n);
    std::vector<IsotypicPiece> out;
    for (const Perm& rep : coset_reps(gt.mu)) {
        IsotypicPiece piece;
        piece.rep = rep;
        piece.character = gt.mu.twist(rep);
        for (size_t i = 0; i < basis.size(); ++i)
            if (gt.mu.twist(basis[i]) == piece.character) piece.indices.push_back(static_cast<int>(i));
        out.push_back(std::move(piece));
    }
    return out;
}

CMat rep_of_elem(const ModuleRep& m, const GghaElem& a) {
    CMat out = czeros(m.dim, m.dim);
    for (const auto& [key, c] : a.terms()) {
        CMat term = cidentity(m.dim);
        for (int letter : key.w.reduced_word()) term = term * m.matrix("s" + std::to_string(letter + 1));
        for (size_t i = 0; i < key.tpow.size(); ++i)
            for (int rep = 0; rep < key.tpow[i]; ++rep) term = term * m.matrix("t" + std::to_string(i + 1));
        for (size_t i = 0; i < key.ddeg.size(); ++i)
            for (int rep = 0; rep < key.ddeg[i]; ++rep) term = term * m.matrix("D" + std::to_string(i + 1));
        out += c * term;
    }
    return out;
}

CMat rep_of_elem(const ModuleRep& m, const GhaElem& a) {
    CMat out = czeros(m.dim, m.dim);
    for (const auto& [key, c] : a.terms()) {
        CMat term = cidentity(m.dim);
        for (int letter : key.w.reduced_word()) term = term * m.matrix("s" + std::to_string(letter + 1));
        for (size_t i = 0; i < key.deg.size(); ++i)
            for (int rep = 0; rep < key.deg[i]; ++rep) term = term * m.matrix("D" + std::to_string(i + 1));
        out += c * term;
    }
    return out;
}

namespace {

GghaElem generator_elem(const GghaAlgebra& alg, const std::string& name) {
    int idx = std::stoi(name.substr(1)) - 1;
    if (name[0] == 'D') return alg.d(idx);
    if (name[0] == 't') return alg.theta(idx);
    if (name[0] == 's') return alg.perm(Perm::simple(alg.n(), idx));
    throw std::invalid_argument("unknown generator " + name);
}

std::vector<CWeight> twist_closure(const std::vector<CWeight>& ws, int n) {
    std::vector<CWeight> out;
    for (const Perm& w : symmetric_group(n)) {
        Perm winv = w.inverse();
        for (const CWeight& cw : ws) {
            CWeight t;
            t.dvals.resize(cw.dvals.size());
            for (size_t i = 0; i < cw.dvals.size(); ++i) t.dvals[i] = cw.dvals[winv(static_cast<int>(i))];
            if (!cw.tvals.empty()) {
                t.tvals.resize(cw.tvals.size());
                for (size_t i = 0; i < cw.tvals.size(); ++i) t.tvals[i] = cw.tvals[winv(static_cast<int>(i))];
            }
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace

ModuleRep twist_module(const GghaAlgebra& alg, const ModuleRep& m, const Perm& w) {
    ModuleRep out = m;
    GghaElem left = alg.perm(w);
    GghaElem right = alg.perm(w.inverse());
    for (size_t i = 0; i < m.gen_names.size(); ++i) {
        GghaElem conj = alg.multiply(left, alg.multiply(generator_elem(alg, m.gen_names[i]), right));
        out.gen_mats[i] = rep_of_elem(m, conj);
    }
    out.cweights = twist_closure(m.cweights, alg.n());
    return out;
}

ModuleRep twist_module_a(const GhaAlgebra& alg, const ModuleRep& m, const Perm& w) {
    ModuleRep out = m;
    GhaElem left = alg.perm(w);
    GhaElem right = alg.perm(w.inverse());
    for (size_t i = 0; i < m.gen_names.size(); ++i) {
        const std::string& name = m.gen_names[i];
        int idx = std::stoi(name.substr(1)) - 1;
        GhaElem gen = name[0] == 'D' ? alg.d(idx) : alg.perm(Perm::simple(alg.n(), idx));
        out.gen_mats[i] = rep_of_elem(m, alg.multiply(left, alg.multiply(gen, right)));
    }
    // Weight candidates: close under the block group.
    std::vector<CWeight> ws;
    for (const Perm& u : alg.group()) {
        Perm uinv = u.inverse();
        for (const CWeight& cw : m.cweights) {
            CWeight t;
            t.dvals.resize(cw.dvals.size());
            for (size_t i = 0; i < cw.dvals.size(); ++i) t.dvals[i] = cw.dvals[uinv(static_cast<int>(i))];
            if (std::find(ws.begin(), ws.end(), t) == ws.end()) ws.push_back(std::move(t));
        }
    }
    out.cweights = std::move(ws);
    return out;
}

ModuleRep delta_twist_module(const GghaAlgebra& alg, const ModuleRep& m) {
    ModuleRep out = m;
    for (size_t i = 0; i < m.gen_names.size(); ++i)
        out.gen_mats[i] = rep_of_elem(m, alg.delta(generator_elem(alg, m.gen_names[i])));
    for (CWeight& cw : out.cweights)
        for (Cyclo& v : cw.tvals) v *= Cyclo::zeta_pow(alg.r(), 1);
    return out;
}

ModuleRep dual_module(const GghaAlgebra& alg, const ModuleRep& m) {
    ModuleRep out = m;
    for (size_t i = 0; i < m.gen_names.size(); ++i) {
        CMat img = rep_of_elem(m, alg.iota(generator_elem(alg, m.gen_names[i])));
        out.gen_mats[i] = img.transpose();
    }
    for (CWeight& cw : out.cweights) {
        for (Cyclo& v : cw.dvals) v = -v;
        for (Cyclo& v : cw.tvals) v = Cyclo::zeta_pow(alg.r(), 1) * v.inverse();
    }
    return out;
}

CChar dual_character(const CChar& gt) {
    // (-^{w0}gamma) (x) det.(^{w0}mu)^{-1}; the det factor comes from
    // iota(theta) = det(theta) theta^{-1} and is what the duality
    // intertwiner certificates pin down.
    const int n = gt.n();
    Perm w0 = Perm::longest(n);
    CChar out = gt.twist(w0);
    for (Cyclo& v : out.gamma) v = -v;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = 1 - out.mu[i];
    out.mu = TChar(gt.mu.r(), std::move(idx));
    return out;
}

std::vector<CMat> intertwiners(const ModuleRep& m, const ModuleRep& n) {
    if (m.gen_names != n.gen_names) throw std::invalid_argument("generator lists differ");
    const int dm = m.dim, dn = n.dim;
    const int unknowns = dm * dn;  // X is dn x dm
    auto var = [&](int row, int col) { return row * dm + col; };
    CMat sys = czeros(static_cast<int>(m.gen_names.size()) * dn * dm, unknowns);
    int eq = 0;
    for (size_t g = 0; g < m.gen_names.size(); ++g) {
        const CMat& A = m.gen_mats[g];
        const CMat& B = n.gen_mats[g];
        // X A - B X = 0
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j) {
                for (int k = 0; k < dm; ++k) sys(eq, var(i, k)) += A(k, j);
                for (int k = 0; k < dn; ++k) sys(eq, var(k, j)) -= B(i, k);
                ++eq;
            }
    }
    CMat null = kernel(sys);
    std::vector<CMat> out;
    for (int c = 0; c < null.cols(); ++c) {
        CMat X = czeros(dn, dm);
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j) X(i, j) = null(var(i, j), c);
        out.push_back(std::move(X));
    }
    return out;
}

bool isomorphic(const ModuleRep& m, const ModuleRep& n) {
    if (m.dim != n.dim) return false;
    std::vector<CMat> homs = intertwiners(m, n);
    if (homs.empty()) return false;
    // det(sum t^i X_i) is a nonzero polynomial of degree <= dim*|homs| when
    // some combination is invertible; enough sample points decide.
    const int tries = m.dim * static_cast<int>(homs.size()) + 1;
    for (int t = 0; t < tries; ++t) {
        CMat X = czeros(n.dim, m.dim);
        Cyclo tp(1);
        for (const CMat& h : homs) {
            X += tp * h;
            tp *= Cyclo(t);
        }
        if (inverse(X)) return true;
    }
    return false;
}

ModuleRep e1_module(const GghaAlgebra& alg, const CChar& gt) {
    const int n = alg.n();
    ModuleRep m = principal_series(alg, gt);
    std::vector<Perm> basis = symmetric_group(n);
    std::vector<int> e1;
    for (size_t i = 0; i < basis.size(); ++i)
        if (gt.mu.twist(basis[i]) == gt.mu) e1.push_back(static_cast<int>(i));

    ModuleRep out;
    out.dim = static_cast<int>(e1.size());
    out.r = alg.r();
    out.n = n;
    out.kbar0 = alg.kbar0();
    out.algebra = "ggha";
    for (int i : e1) out.basis.push_back(m.basis[i]);

    auto restrict_mat = [&](const CMat& big) {
        CMat small = czeros(out.dim, out.dim);
        // stability check: columns of E_1 must not leak outside
        std::vector<char> in_e1(m.dim, 0);
        for (int i : e1) in_e1[i] = 1;
        for (int col = 0; col < out.dim; ++col)
            for (int row = 0; row < m.dim; ++row) {
                if (big(row, e1[col]).is_zero()) continue;
                if (!in_e1[row]) throw std::logic_error("E_1 is not stable under the requested generator");
            }
        for (int rr = 0; rr < out.dim; ++rr)
            for (int cc = 0; cc < out.dim; ++cc) small(rr, cc) = big(e1[rr], e1[cc]);
        return small;
    };

    for (int i = 0; i < n; ++i) {
        out.gen_names.push_back("D" + std::to_string(i + 1));
        out.gen_mats.push_back(restrict_mat(m.matrix("D" + std::to_string(i + 1))));
    }
    for (int i = 0; i < n; ++i) {
        out.gen_names.push_back("t" + std::to_string(i + 1));
        out.gen_mats.push_back(restrict_mat(m.matrix("t" + std::to_string(i + 1))));
    }
    // transpositions generating the stabilizer S_n(pi)
    for (auto [u, v] : stabilizer_transpositions(gt.mu)) {
        CMat big = rep_of_elem(m, alg.perm(Perm::transposition(n, u, v)));
        out.gen_names.push_back("c" + std::to_string(u + 1) + "_" + std::to_string(v + 1));
        out.gen_mats.push_back(restrict_mat(big));
    }
    out.cweights = m.cweights;
    return out;
}

ModuleRep e1_as_gha(const GghaAlgebra& alg, const CChar& gt) {
    const int n = alg.n();
    if (!std::is_sorted(gt.mu.index().begin(), gt.mu.index().end()))
        throw std::invalid_argument("e1_as_gha needs the sorted character mu_pi");
    ModuleRep m = principal_series(alg, gt);
    SortedChar sc = sort_char(gt.mu);  // sigma = id here; gives the blocks
    std::vector<Perm> basis = symmetric_group(n);
    std::vector<int> e1;
    for (size_t i = 0; i < basis.size(); ++i)
        if (gt.mu.twist(basis[i]) == gt.mu) e1.push_back(static_cast<int>(i));
    const int dim = static_cast<int>(e1.size());

    std::vector<char> in_e1(m.dim, 0);
    for (int i : e1) in_e1[i] = 1;
    auto restrict_mat = [&](const CMat& big) {
        CMat small = czeros(dim, dim);
        for (int col = 0; col < dim; ++col)
            for (int row = 0; row < m.dim; ++row)
                if (!big(row, e1[col]).is_zero() && !in_e1[row]) throw std::logic_error("E_1 is not stable");
        for (int rr = 0; rr < dim; ++rr)
            for (int cc = 0; cc < dim; ++cc) small(rr, cc) = big(e1[rr], e1[cc]);
        return small;
    };

    ModuleRep out;
    out.dim = dim;
    out.r = 1;
    out.n = n;
    out.kbar0 = Cyclo(static_cast<long>(alg.r())) * alg.kbar0();  // the multiplicity c = r kbar0
    out.algebra = "gha_a";
    for (int i : e1) out.basis.push_back(m.basis[i]);

    // T must act by the scalar character mu on E_1.
    for (int i = 0; i < n; ++i) {
        CMat small = restrict_mat(m.matrix("t" + std::to_string(i + 1)));
        Cyclo expect = Cyclo::zeta_pow(alg.r(), gt.mu[i]);
        for (int rr = 0; rr < dim; ++rr)
            for (int cc = 0; cc < dim; ++cc)
                if (!(small(rr, cc) == (rr == cc ? expect : Cyclo(0)))) throw std::logic_error("T does not act by mu_pi on E_1");
    }

    for (int i = 0; i < n; ++i) {
        out.gen_names.push_back("D" + std::to_string(i + 1));
        out.gen_mats.push_back(restrict_mat(m.matrix("D" + std::to_string(i + 1))));
    }
    for (auto [lo, hi] : sc.blocks)
        for (int i = lo; i < hi; ++i) {
            out.gen_names.push_back("s" + std::to_string(i + 1));
            out.gen_mats.push_back(restrict_mat(m.matrix("s" + std::to_string(i + 1))));
        }
    for (int idx : e1) {
        CWeight cw;
        Perm winv = basis[idx].inverse();
        for (int i = 0; i < n; ++i) cw.dvals.push_back(gt.gamma[winv(i)]);
        out.cweights.push_back(std::move(cw));
    }
    return out;
}

}  // namespace ghk
