#include "ghecke/simplicity.hpp"

#include <algorithm>
#include <deque>

namespace ghk {

namespace {

// Dense polynomials in one variable t over Q(zeta), constant term first.
using TPoly = std::vector<Cyclo>;

void tp_trim(TPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool tp_zero(const TPoly& p) { return p.empty(); }

TPoly tp_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly out(a.size() + b.size() - 1, Cyclo(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    tp_trim(out);
    return out;
}

TPoly tp_sub(TPoly a, const TPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Cyclo(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    tp_trim(a);
    return a;
}

TPoly tp_scale(TPoly a, const Cyclo& c) {
    for (auto& v : a) v *= c;
    tp_trim(a);
    return a;
}

void tp_divmod(TPoly a, const TPoly& b, TPoly& q, TPoly& rem) {
    q.assign(a.size(), Cyclo(0));
    while (a.size() >= b.size() && !a.empty()) {
        Cyclo f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        tp_trim(a);
    }
    tp_trim(q);
    rem = std::move(a);
}

TPoly tp_gcd(TPoly a, TPoly b) {
    tp_trim(a);
    tp_trim(b);
    while (!b.empty()) {
        TPoly q, rem;
        tp_divmod(a, b, q, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.empty()) {
        Cyclo lead = a.back();
        for (auto& v : a) v /= lead;
    }
    return a;
}

Cyclo tp_eval(const TPoly& p, const Cyclo& t) {
    Cyclo v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    return v;
}

// Rational roots of a polynomial whose coefficients are all rational.
std::vector<Rational> tp_rational_roots(const TPoly& p) {
    std::vector<Rational> out;
    if (p.empty()) return out;
    for (const Cyclo& c : p)
        if (!c.is_rational()) return out;  // only the rational-coefficient case is searched
    // clear denominators
    mpz_class den(1);
    for (const Cyclo& c : p) den = den * c.rational_value().get_den() / gcd(den, mpz_class(c.rational_value().get_den()));
    std::vector<mpz_class> ic;
    for (const Cyclo& c : p) {
        Rational v = c.rational_value() * Rational(den);
        ic.push_back(v.get_num());
    }
    if (!ic.empty() && ic.front() == 0) out.push_back(Rational(0));
    while (!ic.empty() && ic.front() == 0) ic.erase(ic.begin());
    if (ic.empty() || ic.size() == 1) return out;
    mpz_class a0 = abs(ic.front()), an = abs(ic.back());
    std::vector<mpz_class> ps, qs;
    for (mpz_class d(1); d * d <= a0; ++d)
        if (a0 % d == 0) {
            ps.push_back(d);
            ps.push_back(a0 / d);
        }
    for (mpz_class d(1); d * d <= an; ++d)
        if (an % d == 0) {
            qs.push_back(d);
            qs.push_back(an / d);
        }
    for (const auto& pnum : ps)
        for (const auto& qden : qs)
            for (int s : {1, -1}) {
                Rational cand(s * pnum, qden);
                cand.canonicalize();
                if (tp_eval(p, Cyclo(cand)).is_zero())
                    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
            }
    return out;
}

TPoly tp_derivative(const TPoly& p) {
    TPoly out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(Cyclo(static_cast<long>(i)) * p[i]);
    tp_trim(out);
    return out;
}

TPoly tp_squarefree(const TPoly& p) {
    if (p.size() <= 2) return p;
    TPoly g = tp_gcd(p, tp_derivative(p));
    if (g.size() <= 1) return p;
    TPoly q, rem;
    tp_divmod(p, g, q, rem);
    return q;
}

// Roots of p in Q(zeta_r) that we can extract: linear factors always, plus
// rational roots. Sets exhaustive=false when higher-degree non-rational
// factors could hide roots (only possible for r >= 3).
std::vector<Cyclo> tp_field_roots(const TPoly& p, int r, bool& exhaustive) {
    exhaustive = true;
    std::vector<Cyclo> out;
    TPoly q = tp_squarefree(p);
    tp_trim(q);
    if (q.size() <= 1) return out;
    if (q.size() == 2) {
        out.push_back(-(q[0] / q[1]));
        return out;
    }
    bool all_rational = true;
    for (const Cyclo& c : q)
        if (!c.is_rational()) all_rational = false;
    if (all_rational && r <= 2) {
        for (const Rational& root : tp_rational_roots(q)) out.push_back(Cyclo(root));
        return out;  // over Q the rational roots are all roots in the field
    }
    // Peel linear factors obtainable from rational candidates, then give up
    // on exhaustiveness if degree remains.
    for (const Rational& root : tp_rational_roots(q)) out.push_back(Cyclo(root));
    for (const Cyclo& root : out) {
        TPoly lin = {-root, Cyclo(1)};
        TPoly quo, rem;
        tp_divmod(q, lin, quo, rem);
        if (tp_zero(rem)) q = quo;
    }
    if (q.size() > 2) exhaustive = false;
    return out;
}

std::vector<CWeight> distinct_weights(const ModuleRep& m) {
    std::vector<CWeight> out;
    for (const CWeight& w : m.cweights)
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    return out;
}

CMat stack_cgen_shifts(const ModuleRep& m, const CWeight& w, int power) {
    std::vector<int> cg = m.cgen_indices();
    CMat stacked = czeros(static_cast<int>(cg.size()) * m.dim, m.dim);
    for (size_t a = 0; a < cg.size(); ++a) {
        CMat shift = m.gen_mats[cg[a]] - ModuleRep::weight_value(w, m.gen_names[cg[a]]) * cidentity(m.dim);
        CMat pw = cidentity(m.dim);
        for (int e = 0; e < power; ++e) pw = pw * shift;
        stacked.block(static_cast<int>(a) * m.dim, 0, m.dim, m.dim) = pw;
    }
    return stacked;
}

// The enveloping word basis: matrices spanning the image algebra.
std::vector<CMat> word_basis(const ModuleRep& m) {
    RowSpace span(m.dim * m.dim);
    std::vector<CMat> words;
    auto flat = [&](const CMat& a) {
        CVec v = czeros(m.dim * m.dim, 1);
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j) v(i * m.dim + j) = a(i, j);
        return v;
    };
    std::deque<CMat> queue;
    CMat id = cidentity(m.dim);
    span.insert(flat(id));
    words.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        CMat cur = queue.front();
        queue.pop_front();
        for (const CMat& g : m.gen_mats) {
            CMat prod = g * cur;
            if (span.insert(flat(prod))) {
                words.push_back(prod);
                queue.push_back(prod);
            }
        }
    }
    return words;
}

SimplicityReport reducible_report(const ModuleRep& m, const CVec& v, const RowSpace& spun, const std::string& what) {
    SimplicityReport rep;
    rep.verdict = SimplicityReport::Verdict::Reducible;
    rep.certificate = what;
    rep.witness = v;
    rep.witness_basis = spun.basis();
    if (spun.dim() <= 0 || spun.dim() >= m.dim) throw std::logic_error("reducible witness spins to a non-proper subspace");
    return rep;
}

// Spin with polynomial entries in one parameter t; returns the pivot and
// content polynomials encountered. Any parameter value avoiding all their
// roots yields the generic spin dimension, returned in generic_dim.
std::vector<TPoly> pencil_spin(const ModuleRep& m, const CVec& b1, const CVec& b2, int& generic_dim) {
    using PVec = std::vector<TPoly>;
    std::vector<TPoly> charges;
    auto reduce_content = [&](PVec& row) {
        TPoly g;
        for (const TPoly& p : row)
            if (!tp_zero(p)) g = g.empty() ? p : tp_gcd(g, p);
        if (g.size() > 1) {
            for (TPoly& p : row) {
                if (tp_zero(p)) continue;
                TPoly q, rem;
                tp_divmod(p, g, q, rem);
                p = std::move(q);
            }
            charges.push_back(g);
        }
    };
    std::vector<PVec> rows;
    std::vector<int> pivots;
    auto insert_row = [&](PVec row) {
        for (size_t k = 0; k < rows.size(); ++k) {
            if (tp_zero(row[pivots[k]])) continue;
            TPoly e = row[pivots[k]];
            TPoly piv = rows[k][pivots[k]];
            PVec nr(m.dim);
            for (int c = 0; c < m.dim; ++c) nr[c] = tp_sub(tp_mul(piv, row[c]), tp_mul(e, rows[k][c]));
            row = std::move(nr);
        }
        int p = -1;
        for (int c = 0; c < m.dim; ++c)
            if (!tp_zero(row[c])) {
                p = c;
                break;
            }
        if (p < 0) return false;
        reduce_content(row);
        if (row[p].size() > 1) charges.push_back(row[p]);
        rows.push_back(std::move(row));
        pivots.push_back(p);
        return true;
    };
    PVec start(m.dim);
    for (int i = 0; i < m.dim; ++i) start[i] = TPoly{b1(i), b2(i)};
    std::deque<PVec> queue;
    if (insert_row(start)) queue.push_back(rows.back());
    while (!queue.empty()) {
        PVec cur = queue.front();
        queue.pop_front();
        for (const CMat& g : m.gen_mats) {
            PVec img(m.dim);
            for (int i = 0; i < m.dim; ++i) {
                TPoly acc;
                for (int j = 0; j < m.dim; ++j) {
                    if (g(i, j).is_zero() || tp_zero(cur[j])) continue;
                    acc = tp_sub(acc, tp_scale(cur[j], -g(i, j)));
                }
                img[i] = std::move(acc);
            }
            if (insert_row(std::move(img))) queue.push_back(rows.back());
        }
    }
    generic_dim = static_cast<int>(rows.size());
    return charges;
}

}  // namespace

RowSpace spin(const ModuleRep& m, const CVec& v) {
    bool nonzero = false;
    for (int i = 0; i < m.dim; ++i)
        if (!v(i).is_zero()) nonzero = true;
    if (!nonzero) throw std::invalid_argument("cannot spin the zero vector");
    RowSpace space(m.dim);
    std::deque<CVec> queue;
    if (space.insert(v)) queue.push_back(v);
    while (!queue.empty()) {
        CVec cur = queue.front();
        queue.pop_front();
        for (const CMat& g : m.gen_mats) {
            CVec img = g * cur;
            if (space.insert(img)) queue.push_back(img);
        }
    }
    return space;
}

CMat joint_eigenspace(const ModuleRep& m, const CWeight& w) { return kernel(stack_cgen_shifts(m, w, 1)); }

CMat joint_generalized_eigenspace(const ModuleRep& m, const CWeight& w) { return kernel(stack_cgen_shifts(m, w, m.dim)); }

std::vector<std::pair<CWeight, int>> weight_multiplicities(const ModuleRep& m) {
    std::vector<std::pair<CWeight, int>> out;
    for (const CWeight& w : distinct_weights(m)) {
        int d = static_cast<int>(joint_generalized_eigenspace(m, w).cols());
        if (d > 0) out.emplace_back(w, d);
    }
    return out;
}

SimplicityReport is_simple(const ModuleRep& m) {
    if (m.dim == 0) throw std::invalid_argument("zero module");
    if (!cframe_commutes(m)) throw std::logic_error("commutative frame does not commute: module construction bug");
    auto mults = weight_multiplicities(m);
    int total = 0;
    for (auto& [w, d] : mults) total += d;
    if (total != m.dim)
        throw std::logic_error("candidate weights do not exhaust the module (generalized eigenspace dims sum to " +
                               std::to_string(total) + " of " + std::to_string(m.dim) + ")");
    if (m.dim == 1) {
        SimplicityReport rep;
        rep.certificate = "dimension-1";
        rep.factor_dims = {1};
        return rep;
    }

    std::vector<CMat> eigenspaces;
    for (auto& [w, d] : mults) {
        CMat e = joint_eigenspace(m, w);
        if (e.cols() > 0) eigenspaces.push_back(e);
    }

    // Pass 1: spin every eigenspace basis vector (sound for reducibility;
    // decisive overall when every eigenspace is a line).
    bool all_lines = true;
    for (const CMat& e : eigenspaces) {
        if (e.cols() > 1) all_lines = false;
        for (int c = 0; c < e.cols(); ++c) {
            RowSpace s = spin(m, e.col(c));
            if (s.dim() < m.dim) return reducible_report(m, e.col(c), s, "eigenvector-spin");
        }
    }
    if (all_lines) {
        SimplicityReport rep;
        rep.certificate = "all-eigenvectors-spin-full";
        rep.factor_dims = {m.dim};
        return rep;
    }

    // Pass 2: a grid of eigenvector pencils inside each fat eigenspace.
    std::vector<Cyclo> grid = {Cyclo(1), Cyclo(-1), Cyclo(2), Cyclo(-2), Cyclo(Rational(1, 2)), Cyclo(Rational(-1, 2)), Cyclo(3), Cyclo(-3)};
    for (int e = 1; e < m.r; ++e) grid.push_back(Cyclo::zeta_pow(m.r, e));
    for (const CMat& e : eigenspaces)
        for (int a = 0; a < e.cols(); ++a)
            for (int b = a + 1; b < e.cols(); ++b)
                for (const Cyclo& t : grid) {
                    CVec v = e.col(a) + t * e.col(b);
                    RowSpace s = spin(m, v);
                    if (s.dim() < m.dim) return reducible_report(m, v, s, "eigenvector-pencil-grid");
                }

    // Pass 3: Norton-style test over a deterministic element schedule.
    std::vector<CMat> words = word_basis(m);
    std::vector<CMat> schedule;
    for (auto& [w, d] : mults)
        schedule.push_back(stack_cgen_shifts(m, w, 1).block(0, 0, m.dim, m.dim));  // first shifted cgen
    for (size_t i = 0; i < words.size() && i < 40; ++i)
        for (auto& [w, d] : mults) {
            CMat shift = czeros(m.dim, m.dim);
            std::vector<int> cg = m.cgen_indices();
            for (size_t a = 0; a < cg.size(); ++a)
                shift += (m.gen_mats[cg[a]] - ModuleRep::weight_value(w, m.gen_names[cg[a]]) * cidentity(m.dim)) * Cyclo(static_cast<long>(a + 1));
            schedule.push_back(shift * words[i]);
        }
    for (const CMat& A : schedule) {
        CMat nul = kernel(A);
        if (nul.cols() != 1) continue;
        CVec v = nul.col(0);
        RowSpace fwd = spin(m, v);
        if (fwd.dim() < m.dim) return reducible_report(m, v, fwd, "norton-null-spin");
        // transpose side
        ModuleRep mt = m;
        for (auto& g : mt.gen_mats) g = g.transpose().eval();
        CMat nult = kernel(CMat(A.transpose()));
        if (nult.cols() != 1) continue;
        RowSpace bwd = spin(mt, nult.col(0));
        if (bwd.dim() == m.dim) {
            SimplicityReport rep;
            rep.certificate = "norton";
            rep.factor_dims = {m.dim};
            return rep;
        }
        // The annihilator of the transpose-spun space is a proper submodule.
        CMat ub = bwd.basis();  // dim x d, d < dim
        CMat ann = kernel(CMat(ub.transpose()));
        if (ann.cols() == 0 || ann.cols() == m.dim) throw std::logic_error("norton annihilator degenerated");
        RowSpace s = spin(m, ann.col(0));
        if (s.dim() < m.dim) return reducible_report(m, ann.col(0), s, "norton-transpose-annihilator");
        throw std::logic_error("norton annihilator is not stable: engine bug");
    }

    // Pass 4: exhaustive pencil over each 2-dimensional eigenspace. Every
    // minimal submodule meets some eigenspace, so if no line in any fat
    // eigenspace spins proper the module is simple.
    for (const CMat& e : eigenspaces) {
        if (e.cols() == 1) continue;
        if (e.cols() > 2)
            throw OracleRefusal("joint eigenspace of dimension " + std::to_string(e.cols()) +
                                " exceeds the pencil fallback (dim <= 2)");
        int generic_dim = 0;
        std::vector<TPoly> charges = pencil_spin(m, e.col(0), e.col(1), generic_dim);
        if (generic_dim < m.dim) {
            // proper for generic t; find an explicit witness value
            for (long t = 0; t <= 4 * m.dim + 4; ++t) {
                CVec v = e.col(0) + Cyclo(t) * e.col(1);
                RowSpace s = spin(m, v);
                if (s.dim() < m.dim) return reducible_report(m, v, s, "pencil-generic");
            }
            throw std::logic_error("generic pencil drop without rational witness");
        }
        bool exhaustive_all = true;
        for (const TPoly& charge : charges) {
            bool exhaustive = true;
            std::vector<Cyclo> roots = tp_field_roots(charge, m.r, exhaustive);
            exhaustive_all = exhaustive_all && exhaustive;
            for (const Cyclo& t : roots) {
                CVec v = e.col(0) + t * e.col(1);
                bool nz = false;
                for (int i = 0; i < m.dim; ++i)
                    if (!v(i).is_zero()) nz = true;
                if (!nz) continue;
                RowSpace s = spin(m, v);
                if (s.dim() < m.dim) return reducible_report(m, v, s, "pencil-root");
            }
        }
        if (!exhaustive_all)
            throw OracleRefusal("pencil pivot polynomial has irreducible factors of degree > 1 over Q(zeta_" +
                                std::to_string(m.r) + "); cannot enumerate roots");
    }
    SimplicityReport rep;
    rep.certificate = "pencil";
    rep.factor_dims = {m.dim};
    return rep;
}

ModuleRep submodule_rep(const ModuleRep& m, const CMat& basis) {
    const int d = static_cast<int>(basis.cols());
    ModuleRep out;
    out.dim = d;
    out.r = m.r;
    out.n = m.n;
    out.kbar0 = m.kbar0;
    out.algebra = m.algebra;
    out.gen_names = m.gen_names;
    out.cweights = m.cweights;
    for (int i = 0; i < d; ++i) out.basis.push_back("v" + std::to_string(i + 1));
    for (const CMat& g : m.gen_mats) {
        CMat img = g * basis;
        CMat small = czeros(d, d);
        for (int c = 0; c < d; ++c) {
            auto x = solve(basis, img.col(c));
            if (!x) throw std::logic_error("subspace is not stable under the action");
            small.col(c) = *x;
        }
        out.gen_mats.push_back(std::move(small));
    }
    return out;
}

ModuleRep quotient_rep(const ModuleRep& m, const CMat& basis) {
    const int d = static_cast<int>(basis.cols());
    const int q = m.dim - d;
    // Complete to a full basis with standard vectors.
    CMat P = czeros(m.dim, m.dim);
    P.block(0, 0, m.dim, d) = basis;
    {
        RowSpace probe(m.dim);
        for (int c = 0; c < d; ++c) probe.insert(basis.col(c));
        int at = d;
        for (int i = 0; i < m.dim && at < m.dim; ++i) {
            CVec e = czeros(m.dim, 1);
            e(i) = Cyclo(1);
            if (probe.insert(e)) P.col(at++) = e;
        }
        if (at != m.dim) throw std::logic_error("failed to complete basis");
    }
    auto Pinv = inverse(P);
    if (!Pinv) throw std::logic_error("basis completion is singular");
    ModuleRep out;
    out.dim = q;
    out.r = m.r;
    out.n = m.n;
    out.kbar0 = m.kbar0;
    out.algebra = m.algebra;
    out.gen_names = m.gen_names;
    out.cweights = m.cweights;
    for (int i = 0; i < q; ++i) out.basis.push_back("q" + std::to_string(i + 1));
    for (const CMat& g : m.gen_mats) {
        CMat conj = *Pinv * g * P;
        if (!is_zero(CMat(conj.block(d, 0, q, d)))) throw std::logic_error("subspace is not stable: quotient ill-defined");
        out.gen_mats.push_back(conj.block(d, d, q, q));
    }
    return out;
}

std::vector<ModuleRep> composition_factors(const ModuleRep& m, int desk_bound) {
    if (m.dim > desk_bound)
        throw OracleRefusal("module dimension " + std::to_string(m.dim) + " exceeds the desk-scale bound " +
                            std::to_string(desk_bound));
    SimplicityReport rep = is_simple(m);
    if (rep.simple()) return {m};
    ModuleRep sub = submodule_rep(m, rep.witness_basis);
    ModuleRep quo = quotient_rep(m, rep.witness_basis);
    std::vector<ModuleRep> out = composition_factors(sub, desk_bound);
    for (auto& f : composition_factors(quo, desk_bound)) out.push_back(std::move(f));
    return out;
}

std::vector<int> composition_factor_dims(const ModuleRep& m, int desk_bound) {
    std::vector<int> dims;
    for (const ModuleRep& f : composition_factors(m, desk_bound)) dims.push_back(f.dim);
    std::sort(dims.begin(), dims.end());
    return dims;
}

}  // namespace ghk
