#include "ghecke/gha_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghk {

void GhaElem::add(const GhaKey& key, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GhaElem& GhaElem::operator+=(const GhaElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

GhaElem& GhaElem::operator-=(const GhaElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

GhaElem& GhaElem::operator*=(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

GhaAlgebra::GhaAlgebra(int n, std::vector<std::pair<int, int>> blocks, Cyclo c)
    : n_(n), blocks_(std::move(blocks)), c_(std::move(c)) {
    std::vector<char> covered(n_, 0);
    for (auto [lo, hi] : blocks_) {
        if (lo < 0 || hi >= n_ || lo > hi) throw std::invalid_argument("bad block interval");
        for (int i = lo; i <= hi; ++i) {
            if (covered[i]) throw std::invalid_argument("overlapping blocks");
            covered[i] = 1;
        }
        for (int i = lo; i < hi; ++i) simples_.push_back(i);
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw std::invalid_argument("blocks must partition {1..n}");
    // Block Weyl group: permutations preserving every block pointwise range.
    for (const Perm& w : symmetric_group(n_)) {
        bool ok = true;
        for (auto [lo, hi] : blocks_)
            for (int i = lo; i <= hi && ok; ++i)
                if (w(i) < lo || w(i) > hi) ok = false;
        if (ok) group_.push_back(w);
    }
}

GhaElem GhaAlgebra::scalar(const Cyclo& v) const {
    GhaElem e;
    e.add(GhaKey{Perm::identity(n_), std::vector<int>(n_, 0)}, v);
    return e;
}

GhaElem GhaAlgebra::d(int i) const {
    std::vector<int> deg(n_, 0);
    deg[i] = 1;
    return monomial(Perm::identity(n_), deg, Cyclo(1));
}

GhaElem GhaAlgebra::perm(const Perm& w) const { return monomial(w, std::vector<int>(n_, 0), Cyclo(1)); }

GhaElem GhaAlgebra::monomial(const Perm& w, const std::vector<int>& deg, const Cyclo& v) const {
    GhaElem e;
    e.add(GhaKey{w, deg}, v);
    return e;
}

GhaElem GhaAlgebra::push_d_through_perm(int j, const Perm& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dpush_cache_.find({j, w});
        if (it != dpush_cache_.end()) return it->second;
    }
    GhaElem out;
    if (w.is_identity()) {
        std::vector<int> deg(n_, 0);
        deg[j] = 1;
        out.add(GhaKey{w, deg}, Cyclo(1));
    } else {
        int i = w.reduced_word().front();
        Perm rest = Perm::simple(n_, i) * w;
        GhaElem inner;
        int sign = 0;
        if (j == i) {
            inner = push_d_through_perm(i + 1, rest);
            sign = -1;
        } else if (j == i + 1) {
            inner = push_d_through_perm(i, rest);
            sign = 1;
        } else {
            inner = push_d_through_perm(j, rest);
        }
        out = leftmul_perm(Perm::simple(n_, i), inner);
        if (sign != 0) out.add(GhaKey{rest, std::vector<int>(n_, 0)}, sign > 0 ? c_ : -c_);
    }
    std::lock_guard<std::mutex> lock(mu_);
    dpush_cache_.emplace(std::make_pair(j, w), out);
    return out;
}

GhaElem GhaAlgebra::leftmul_d(int j, const GhaElem& e) const {
    GhaElem out;
    for (const auto& [key, c] : e.terms()) {
        GhaElem pushed = push_d_through_perm(j, key.w);
        for (const auto& [pk, pc] : pushed.terms()) {
            std::vector<int> deg(n_);
            for (int t = 0; t < n_; ++t) deg[t] = pk.deg[t] + key.deg[t];
            out.add(GhaKey{pk.w, deg}, c * pc);
        }
    }
    return out;
}

GhaElem GhaAlgebra::leftmul_perm(const Perm& w, const GhaElem& e) const {
    GhaElem out;
    for (const auto& [key, c] : e.terms()) out.add(GhaKey{w * key.w, key.deg}, c);
    return out;
}

GhaElem GhaAlgebra::multiply(const GhaElem& a, const GhaElem& b) const {
    GhaElem out;
    for (const auto& [key, c] : a.terms()) {
        GhaElem acc = b;
        for (int i = 0; i < n_; ++i)
            for (int rep = 0; rep < key.deg[i]; ++rep) acc = leftmul_d(i, acc);
        acc = leftmul_perm(key.w, acc);
        acc *= c;
        out += acc;
    }
    return out;
}

ModuleRep principal_series_a(const GhaAlgebra& alg, const std::vector<Cyclo>& lambda) {
    const int n = alg.n();
    if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("lambda needs one coordinate per index");
    const std::vector<Perm>& basis = alg.group();
    const int dim = static_cast<int>(basis.size());
    auto index_of = [&](const Perm& w) {
        for (int i = 0; i < dim; ++i)
            if (basis[i] == w) return i;
        throw std::logic_error("basis element escaped the block group");
    };

    ModuleRep m;
    m.dim = dim;
    m.n = n;
    m.r = 1;
    m.kbar0 = alg.c();
    m.algebra = "gha_a";
    for (const Perm& w : basis) m.basis.push_back(w.str());

    auto evaluate = [&](const GhaElem& e, CMat& mat, int col) {
        for (const auto& [key, c] : e.terms()) {
            Cyclo v = c;
            for (int t = 0; t < n; ++t)
                for (int rep = 0; rep < key.deg[t]; ++rep) v *= lambda[t];
            mat(index_of(key.w), col) += v;
        }
    };

    for (int j = 0; j < n; ++j) {
        CMat mat = czeros(dim, dim);
        for (int col = 0; col < dim; ++col) evaluate(alg.multiply(alg.d(j), alg.perm(basis[col])), mat, col);
        m.gen_names.push_back("D" + std::to_string(j + 1));
        m.gen_mats.push_back(std::move(mat));
    }
    for (int i : alg.simple_positions()) {
        CMat mat = czeros(dim, dim);
        Perm s = Perm::simple(n, i);
        for (int col = 0; col < dim; ++col) mat(index_of(s * basis[col]), col) = Cyclo(1);
        m.gen_names.push_back("s" + std::to_string(i + 1));
        m.gen_mats.push_back(std::move(mat));
    }
    for (const Perm& w : basis) {
        CWeight cw;
        Perm winv = w.inverse();
        for (int i = 0; i < n; ++i) cw.dvals.push_back(lambda[winv(i)]);
        m.cweights.push_back(std::move(cw));
    }
    return m;
}

std::vector<std::pair<int, int>> kr_set(const GhaAlgebra& alg, const std::vector<Cyclo>& lambda) {
    std::vector<std::pair<int, int>> out;
    for (auto [lo, hi] : alg.blocks())
        for (int i = lo; i <= hi; ++i)
            for (int j = i + 1; j <= hi; ++j) {
                Cyclo diff = lambda[i] - lambda[j];
                if (diff == alg.c() || diff == -alg.c()) out.emplace_back(i, j);
            }
    return out;
}

}  // namespace ghk
