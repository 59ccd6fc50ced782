#include "ghecke/ggha.hpp"

#include <algorithm>
#include <numeric>

namespace ghk {

bool GghaKey::operator<(const GghaKey& o) const {
    if (w != o.w) return w < o.w;
    if (tpow != o.tpow) return tpow < o.tpow;
    return ddeg < o.ddeg;
}

int GghaKey::dtotal() const { return std::accumulate(ddeg.begin(), ddeg.end(), 0); }

void GghaElem::add(const GghaKey& key, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cyclo GghaElem::coeff(const GghaKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Cyclo(0) : it->second;
}

GghaElem& GghaElem::operator+=(const GghaElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

GghaElem& GghaElem::operator-=(const GghaElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

GghaElem& GghaElem::operator*=(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

GghaElem GghaElem::operator-() const {
    GghaElem out = *this;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
}

int GghaElem::ddegree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.dtotal());
    return d;
}

std::string GghaElem::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*[w=" + k.w.str() + " t=";
        for (int v : k.tpow) s += std::to_string(v) + ",";
        s += " D=";
        for (int v : k.ddeg) s += std::to_string(v) + ",";
        s += "]";
    }
    return s;
}

GghaAlgebra::GghaAlgebra(int r, int n, Cyclo kbar0, WordStrategy strategy)
    : r_(r), n_(n), kbar0_(std::move(kbar0)), strategy_(strategy) {}

GghaElem GghaAlgebra::scalar(const Cyclo& c) const {
    GghaElem e;
    e.add(GghaKey{Perm::identity(n_), std::vector<int>(n_, 0), std::vector<int>(n_, 0)}, c);
    return e;
}

GghaElem GghaAlgebra::d(int i) const {
    std::vector<int> a(n_, 0);
    a[i] = 1;
    return monomial(Perm::identity(n_), std::vector<int>(n_, 0), a, Cyclo(1));
}

GghaElem GghaAlgebra::theta(int i, int t) const {
    std::vector<int> tp(n_, 0);
    tp[i] = ((t % r_) + r_) % r_;
    return monomial(Perm::identity(n_), tp, std::vector<int>(n_, 0), Cyclo(1));
}

GghaElem GghaAlgebra::perm(const Perm& w) const {
    return monomial(w, std::vector<int>(n_, 0), std::vector<int>(n_, 0), Cyclo(1));
}

GghaElem GghaAlgebra::group(const GroupElem& g) const {
    // (torsion, w) = theta^torsion * w as a matrix; our monomial is w theta^t,
    // so transport: theta^torsion w = w theta^{torsion o w}.
    std::vector<int> tp(n_, 0);
    for (int i = 0; i < n_; ++i) tp[i] = g.torsion()[g.perm()(i)];
    return monomial(g.perm(), tp, std::vector<int>(n_, 0), Cyclo(1));
}

GghaElem GghaAlgebra::monomial(const Perm& w, const std::vector<int>& tpow, const std::vector<int>& ddeg, const Cyclo& c) const {
    GghaElem e;
    std::vector<int> tp = tpow;
    for (auto& v : tp) v = ((v % r_) + r_) % r_;
    e.add(GghaKey{w, tp, ddeg}, c);
    return e;
}

GghaElem GghaAlgebra::ktilde(int i, int j) const {
    GghaElem out;
    for (int m = 0; m < r_; ++m) {
        std::vector<int> tp(n_, 0);
        tp[i] = m;
        tp[j] = (r_ - m) % r_;
        out.add(GghaKey{Perm::identity(n_), tp, std::vector<int>(n_, 0)}, kbar0_);
    }
    return out;
}

GghaElem GghaAlgebra::push_d_through_perm(int j, const Perm& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dpush_cache_.find({j, w});
        if (it != dpush_cache_.end()) return it->second;
    }
    GghaElem out;
    if (w.is_identity()) {
        std::vector<int> a(n_, 0);
        a[j] = 1;
        out.add(GghaKey{w, std::vector<int>(n_, 0), a}, Cyclo(1));
    } else {
        // Peel one simple reflection from the left: w = s_i w', l(w') = l(w)-1.
        int i;
        if (strategy_ == WordStrategy::RightmostDescent) {
            i = w.reduced_word().front();
        } else {
            i = w.left_descents().front();
        }
        Perm rest = Perm::simple(n_, i) * w;
        GghaElem inner;
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
        if (sign != 0) {
            // +/- ktilde_{i,i+1} * w' = w' * ktilde_{w'^{-1}(i), w'^{-1}(i+1)}
            Perm rinv = rest.inverse();
            int u = rinv(i), v = rinv(i + 1);
            for (int m = 0; m < r_; ++m) {
                std::vector<int> tp(n_, 0);
                tp[u] = m;
                tp[v] = (r_ - m) % r_;
                out.add(GghaKey{rest, tp, std::vector<int>(n_, 0)}, sign > 0 ? kbar0_ : -kbar0_);
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    dpush_cache_.emplace(std::make_pair(j, w), out);
    return out;
}

GghaElem GghaAlgebra::leftmul_d(int j, const GghaElem& e) const {
    GghaElem out;
    for (const auto& [key, c] : e.terms()) {
        GghaElem pushed = push_d_through_perm(j, key.w);
        for (const auto& [pk, pc] : pushed.terms()) {
            std::vector<int> tp(n_);
            std::vector<int> dd(n_);
            for (int t = 0; t < n_; ++t) {
                tp[t] = (pk.tpow[t] + key.tpow[t]) % r_;
                dd[t] = pk.ddeg[t] + key.ddeg[t];
            }
            GghaElem tmp;
            tmp.add(GghaKey{pk.w, tp, dd}, c * pc);
            out += tmp;
        }
    }
    return out;
}

GghaElem GghaAlgebra::leftmul_theta(const std::vector<int>& tpow, const GghaElem& e) const {
    GghaElem out;
    for (const auto& [key, c] : e.terms()) {
        // theta^t w = w theta^{t o w}, (t o w)_i = t_{w(i)}
        std::vector<int> tp = key.tpow;
        for (int i = 0; i < n_; ++i) tp[i] = (tp[i] + tpow[key.w(i)]) % r_;
        out.add(GghaKey{key.w, tp, key.ddeg}, c);
    }
    return out;
}

GghaElem GghaAlgebra::leftmul_perm(const Perm& w, const GghaElem& e) const {
    GghaElem out;
    for (const auto& [key, c] : e.terms()) out.add(GghaKey{w * key.w, key.tpow, key.ddeg}, c);
    return out;
}

GghaElem GghaAlgebra::multiply(const GghaElem& a, const GghaElem& b) const {
    GghaElem out;
    for (const auto& [key, c] : a.terms()) {
        GghaElem acc = b;
        for (int i = 0; i < n_; ++i)
            for (int rep = 0; rep < key.ddeg[i]; ++rep) acc = leftmul_d(i, acc);
        acc = leftmul_theta(key.tpow, acc);
        acc = leftmul_perm(key.w, acc);
        acc *= c;
        out += acc;
    }
    return out;
}

GghaElem GghaAlgebra::commute_closed_form(const Perm& w, const std::vector<Cyclo>& coeffs) const {
    // w(zeta) = sum_j coeffs[j] D_{w(j)}
    std::vector<Cyclo> wc(n_, Cyclo(0));
    for (int j = 0; j < n_; ++j) wc[w(j)] = coeffs[j];
    GghaElem out;
    for (int j = 0; j < n_; ++j) {
        if (wc[j].is_zero()) continue;
        out += wc[j] * multiply(d(j), perm(w));
    }
    Perm winv = w.inverse();
    for (auto [i, j] : winv.inversions()) {
        Cyclo pair_coeff = wc[i] - wc[j];
        if (pair_coeff.is_zero()) continue;
        Perm front = Perm::transposition(n_, i, j) * w;
        int u = winv(i), v = winv(j);
        // +(c_i - c_j) (i,j) w ktilde_{u,v}; the theta part is already
        // rightmost, so each summand of ktilde is a normal-form monomial.
        for (int m = 0; m < r_; ++m) {
            std::vector<int> tp(n_, 0);
            tp[u] = m % r_;
            tp[v] = (tp[v] + r_ - m) % r_;
            out.add(GghaKey{front, tp, std::vector<int>(n_, 0)}, pair_coeff * kbar0_);
        }
    }
    return out;
}

bool GghaAlgebra::is_central(const GghaElem& z) const {
    std::vector<GghaElem> gens;
    for (int i = 0; i < n_; ++i) gens.push_back(d(i));
    gens.push_back(theta(0));
    for (int i = 0; i + 1 < n_; ++i) gens.push_back(perm(Perm::simple(n_, i)));
    for (const GghaElem& g : gens)
        if (multiply(g, z) != multiply(z, g)) return false;
    return true;
}

GghaElem GghaAlgebra::delta(const GghaElem& a) const {
    GghaElem out;
    for (const auto& [key, c] : a.terms()) {
        long s = std::accumulate(key.tpow.begin(), key.tpow.end(), 0L);
        out.add(key, c * Cyclo::zeta_pow(r_, s));
    }
    return out;
}

GghaElem GghaAlgebra::iota(const GghaElem& a) const {
    GghaElem out;
    for (const auto& [key, c] : a.terms()) {
        // iota(w theta^t D^a) = (-1)^{|a|} D^a iota(theta^t) iota(w)
        //                     = (-1)^{|a|} zeta^{sum t} sign(w) D^a theta^{-t} w^{-1}
        long s = std::accumulate(key.tpow.begin(), key.tpow.end(), 0L);
        Cyclo factor = c * Cyclo::zeta_pow(r_, s);
        if (key.w.sign() < 0) factor = -factor;
        if (key.dtotal() % 2 == 1) factor = -factor;
        std::vector<int> mt(n_);
        for (int i = 0; i < n_; ++i) mt[i] = (r_ - key.tpow[i]) % r_;
        GghaElem tail = multiply(monomial(Perm::identity(n_), mt, key.ddeg, factor), perm(key.w.inverse()));
        out += tail;
    }
    return out;
}

CherElem psi(const CherAlgebra& cher, const GghaElem& a) {
    CherElem out;
    const int n = cher.n();
    const int r = cher.r();
    for (const auto& [key, c] : a.terms()) {
        // w theta^t -> the group element theta^{w.t} w (matrix semantics)
        std::vector<int> tor(n, 0);
        Perm winv = key.w.inverse();
        for (int i = 0; i < n; ++i) tor[i] = key.tpow[winv(i)];
        CherElem acc = cher.group(GroupElem(r, tor, key.w));
        for (int i = 0; i < n; ++i)
            for (int rep = 0; rep < key.ddeg[i]; ++rep) acc = cher.multiply(acc, cher.dunkl(i));
        acc *= c;
        out += acc;
    }
    return out;
}

GghaElem elementary_symmetric_d(const GghaAlgebra& alg, int k) {
    const int n = alg.n();
    GghaElem out;
    std::vector<int> idx(k);
    // iterate over k-subsets of {0..n-1}
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<int> dd(n, 0);
        for (int i : idx) dd[i] = 1;
        out.add(GghaKey{Perm::identity(n), std::vector<int>(n, 0), dd}, Cyclo(1));
        int p = k - 1;
        while (p >= 0 && idx[p] == n - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    return out;
}

}  // namespace ghk
