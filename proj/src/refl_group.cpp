#include "ghecke/refl_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ghk {

namespace {
int mod_r(int v, int r) {
    int m = v % r;
    return m < 0 ? m + r : m;
}
}  // namespace

GroupElem::GroupElem(int r, std::vector<int> torsion, Perm perm) : r_(r), torsion_(std::move(torsion)), perm_(std::move(perm)) {
    if (static_cast<int>(torsion_.size()) != perm_.size()) throw std::invalid_argument("torsion length != n");
    for (auto& t : torsion_) t = mod_r(t, r_);
}

GroupElem GroupElem::identity(int r, int n) { return GroupElem(r, std::vector<int>(n, 0), Perm::identity(n)); }

GroupElem GroupElem::theta(int r, int n, int i, int t) {
    std::vector<int> tor(n, 0);
    tor[i] = mod_r(t, r);
    return GroupElem(r, std::move(tor), Perm::identity(n));
}

GroupElem GroupElem::refl_s(int r, int n, int i, int j, int m) {
    if (i == j) throw std::invalid_argument("reflection s_{i,j} needs i != j");
    std::vector<int> tor(n, 0);
    tor[i] = mod_r(m, r);
    tor[j] = mod_r(-m, r);
    return GroupElem(r, std::move(tor), Perm::transposition(n, i, j));
}

GroupElem GroupElem::permutation(int r, int n, const Perm& w) { return GroupElem(r, std::vector<int>(n, 0), w); }

GroupElem GroupElem::operator*(const GroupElem& o) const {
    if (r_ != o.r_ || n() != o.n()) throw std::invalid_argument("group elements from different groups");
    // (t,w)(t',w') = (t + w.t', w w') with (w.t')_i = t'_{w^{-1}(i)}.
    Perm winv = perm_.inverse();
    std::vector<int> tor(n());
    for (int i = 0; i < n(); ++i) tor[i] = mod_r(torsion_[i] + o.torsion_[winv(i)], r_);
    return GroupElem(r_, std::move(tor), perm_ * o.perm_);
}

GroupElem GroupElem::inverse() const {
    Perm winv = perm_.inverse();
    std::vector<int> tor(n());
    for (int i = 0; i < n(); ++i) tor[i] = mod_r(-torsion_[perm_(i)], r_);
    return GroupElem(r_, std::move(tor), winv);
}

bool GroupElem::is_identity() const {
    return perm_.is_identity() && std::all_of(torsion_.begin(), torsion_.end(), [](int t) { return t == 0; });
}

Cyclo GroupElem::det() const {
    long s = std::accumulate(torsion_.begin(), torsion_.end(), 0L);
    Cyclo d = Cyclo::zeta_pow(r_, s);
    return perm_.sign() < 0 ? -d : d;
}

std::pair<int, Cyclo> GroupElem::act_on_basis(int i) const {
    int j = perm_(i);
    return {j, Cyclo::zeta_pow(r_, torsion_[j])};
}

std::pair<int, Cyclo> GroupElem::act_on_dual_basis(int i) const {
    // g . alpha_i = zeta^{-t_{w(i)}} alpha_{w(i)}.
    int j = perm_(i);
    return {j, Cyclo::zeta_pow(r_, -torsion_[j])};
}

bool GroupElem::operator<(const GroupElem& o) const {
    if (perm_ != o.perm_) return perm_ < o.perm_;
    return torsion_ < o.torsion_;
}

std::string GroupElem::str() const {
    std::string s = "(t=[";
    for (int i = 0; i < n(); ++i) {
        if (i) s += ",";
        s += std::to_string(torsion_[i]);
    }
    s += "], w=" + perm_.str() + ")";
    return s;
}

std::vector<GroupElem> full_group(int r, int n) {
    std::vector<GroupElem> out;
    std::vector<Perm> sn = symmetric_group(n);
    std::vector<int> tor(n, 0);
    for (const Perm& w : sn) {
        std::fill(tor.begin(), tor.end(), 0);
        while (true) {
            out.emplace_back(r, tor, w);
            int k = 0;
            while (k < n && ++tor[k] == r) tor[k++] = 0;
            if (k == n) break;
        }
    }
    return out;
}

TChar::TChar(int r, std::vector<int> idx) : r_(r), idx_(std::move(idx)) {
    for (auto& v : idx_) v = mod_r(v, r_);
}

TChar TChar::trivial(int r, int n) { return TChar(r, std::vector<int>(n, 0)); }

Cyclo TChar::value(const std::vector<int>& t) const {
    if (t.size() != idx_.size()) throw std::invalid_argument("torsion length != n");
    long e = 0;
    for (size_t i = 0; i < t.size(); ++i) e += static_cast<long>(idx_[i]) * t[i];
    return Cyclo::zeta_pow(r_, e);
}

std::vector<int> TChar::r_index() const {
    std::vector<int> out(r_, 0);
    for (int v : idx_) ++out[v];
    return out;
}

TChar TChar::twist(const Perm& w) const {
    Perm winv = w.inverse();
    std::vector<int> idx(idx_.size());
    for (size_t i = 0; i < idx_.size(); ++i) idx[i] = idx_[winv(static_cast<int>(i))];
    return TChar(r_, std::move(idx));
}

TChar TChar::inverse_char() const {
    std::vector<int> idx(idx_.size());
    for (size_t i = 0; i < idx_.size(); ++i) idx[i] = mod_r(-idx_[i], r_);
    return TChar(r_, std::move(idx));
}

SortedChar sort_char(const TChar& pi) {
    const int n = pi.n();
    // Stable argsort a: position i of the sorted index holds original a[i].
    std::vector<int> a(n);
    std::iota(a.begin(), a.end(), 0);
    std::stable_sort(a.begin(), a.end(), [&](int x, int y) { return pi[x] < pi[y]; });
    SortedChar out;
    out.sigma = Perm(a).inverse();  // sigma^{-1}(i) = a[i], so ^sigma pi is sorted
    out.mu = pi.twist(out.sigma);
    int lo = 0;
    while (lo < n) {
        int hi = lo;
        while (hi + 1 < n && out.mu[hi + 1] == out.mu[lo]) ++hi;
        out.blocks.emplace_back(lo, hi);
        lo = hi + 1;
    }
    return out;
}

std::vector<std::pair<int, int>> stabilizer_transpositions(const TChar& pi) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < pi.n(); ++u)
        for (int v = u + 1; v < pi.n(); ++v)
            if (pi[u] == pi[v]) out.emplace_back(u, v);
    return out;
}

std::vector<Perm> stabilizer_elements(const TChar& pi) {
    std::vector<Perm> out;
    for (const Perm& w : symmetric_group(pi.n()))
        if (pi.twist(w) == pi) out.push_back(w);
    return out;  // symmetric_group is already length-lex sorted
}

std::vector<Perm> coset_reps(const TChar& pi) {
    std::vector<Perm> reps;
    std::map<std::vector<int>, Perm> seen;  // ^w pi -> shortest w
    for (const Perm& w : symmetric_group(pi.n())) {
        std::vector<int> key = pi.twist(w).index();
        if (seen.find(key) == seen.end()) {
            seen.emplace(std::move(key), w);
            reps.push_back(w);
        }
    }
    return reps;  // id comes first, then by (length, lex)
}

}  // namespace ghk
