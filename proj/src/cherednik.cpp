#include "ghecke/cherednik.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ghk {

CherParams::CherParams(int r_, int n_, std::vector<Cyclo> k_, Cyclo kbar0_)
    : r(r_), n(n_), k(std::move(k_)), kbar0(std::move(kbar0_)) {
    if (static_cast<int>(k.size()) != r - 1) throw std::invalid_argument("need r-1 values k_1..k_{r-1}");
}

CherParams CherParams::zero(int r, int n) {
    return CherParams(r, n, std::vector<Cyclo>(r - 1, Cyclo(0)), Cyclo(0));
}

bool CherKey::operator<(const CherKey& o) const {
    if (xdeg != o.xdeg) return xdeg < o.xdeg;
    if (g != o.g) return g < o.g;
    return ydeg < o.ydeg;
}

int CherKey::xtotal() const { return std::accumulate(xdeg.begin(), xdeg.end(), 0); }
int CherKey::ytotal() const { return std::accumulate(ydeg.begin(), ydeg.end(), 0); }

void CherElem::add(const CherKey& key, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cyclo CherElem::coeff(const CherKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Cyclo(0) : it->second;
}

CherElem& CherElem::operator+=(const CherElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

CherElem& CherElem::operator-=(const CherElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

CherElem& CherElem::operator*=(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

CherElem CherElem::operator-() const {
    CherElem out = *this;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
}

int CherElem::total_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.xtotal() + k.ytotal());
    return d;
}

bool CherElem::is_group_algebra() const {
    for (const auto& [k, c] : terms_)
        if (k.xtotal() != 0 || k.ytotal() != 0) return false;
    return true;
}

bool CherElem::is_ct_algebra() const {
    if (!is_group_algebra()) return false;
    for (const auto& [k, c] : terms_)
        if (!k.g.perm().is_identity()) return false;
    return true;
}

namespace {
std::string deg_str(const char* sym, const std::vector<int>& deg) {
    std::string s;
    for (size_t i = 0; i < deg.size(); ++i) {
        if (deg[i] == 0) continue;
        s += std::string(sym) + std::to_string(i + 1);
        if (deg[i] != 1) s += "^" + std::to_string(deg[i]);
        s += " ";
    }
    return s;
}
}  // namespace

std::string CherElem::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*[" + deg_str("x", k.xdeg) + k.g.str() + " " + deg_str("y", k.ydeg) + "]";
    }
    return s;
}

CherAlgebra::CherAlgebra(CherParams p) : p_(std::move(p)) {}

CherElem CherAlgebra::one() const { return scalar(Cyclo(1)); }

CherElem CherAlgebra::scalar(const Cyclo& c) const {
    CherElem e;
    e.add(CherKey{std::vector<int>(n(), 0), GroupElem::identity(r(), n()), std::vector<int>(n(), 0)}, c);
    return e;
}

CherElem CherAlgebra::x(int i) const {
    std::vector<int> a(n(), 0);
    a[i] = 1;
    return monomial(a, GroupElem::identity(r(), n()), std::vector<int>(n(), 0), Cyclo(1));
}

CherElem CherAlgebra::y(int i) const {
    std::vector<int> b(n(), 0);
    b[i] = 1;
    return monomial(std::vector<int>(n(), 0), GroupElem::identity(r(), n()), b, Cyclo(1));
}

CherElem CherAlgebra::group(const GroupElem& g) const {
    return monomial(std::vector<int>(n(), 0), g, std::vector<int>(n(), 0), Cyclo(1));
}

CherElem CherAlgebra::monomial(const std::vector<int>& xdeg, const GroupElem& g, const std::vector<int>& ydeg, const Cyclo& c) const {
    CherElem e;
    e.add(CherKey{xdeg, g, ydeg}, c);
    return e;
}

CherElem CherAlgebra::commutator_yx(int i, int j) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = comm_cache_.find({i, j});
        if (it != comm_cache_.end()) return it->second;
    }
    CherElem out;
    const GroupElem id = GroupElem::identity(r(), n());
    const std::vector<int> z(n(), 0);
    if (i == j) {
        out.add(CherKey{z, id, z}, Cyclo(1));
        // - sum_t k_t xi_i^t
        for (int t = 1; t < r(); ++t) out.add(CherKey{z, GroupElem::theta(r(), n(), i, t), z}, -p_.k[t - 1]);
        // - kbar0 sum_m sum_{v != i} s_{i,v}^{[m]}
        for (int m = 0; m < r(); ++m)
            for (int v = 0; v < n(); ++v) {
                if (v == i) continue;
                out.add(CherKey{z, GroupElem::refl_s(r(), n(), i, v, m), z}, -p_.kbar0);
            }
    } else {
        // kbar0 sum_m zeta^{-m} s_{i,j}^{[m]}
        for (int m = 0; m < r(); ++m)
            out.add(CherKey{z, GroupElem::refl_s(r(), n(), i, j, m), z}, p_.kbar0 * Cyclo::zeta_pow(r(), -m));
    }
    std::lock_guard<std::mutex> lock(mu_);
    comm_cache_.emplace(std::make_pair(i, j), out);
    return out;
}

CherElem CherAlgebra::ktilde(int i, int j) const {
    CherElem out;
    const std::vector<int> z(n(), 0);
    for (int m = 0; m < r(); ++m) {
        std::vector<int> tor(n(), 0);
        tor[i] = m;
        tor[j] = (r() - m) % r();
        out.add(CherKey{z, GroupElem(r(), tor, Perm::identity(n())), z}, p_.kbar0);
    }
    return out;
}

CherElem CherAlgebra::dunkl(int j) const {
    // The correction sign is the one that makes the D_j commute under the
    // evaluation pairing fixed in commutator_yx (the printed form with the
    // opposite sign belongs to the opposite pairing convention, k_0 -> -k_0).
    CherElem out = multiply(y(j), x(j));
    for (int i = 0; i < j; ++i) out += multiply(ktilde(i, j), group(GroupElem::refl_s(r(), n(), i, j, 0)));
    return out;
}

CherElem CherAlgebra::cross_constant(int i) const {
    CherElem s = group(GroupElem::refl_s(r(), n(), i, i + 1, 0));
    return multiply(s, dunkl(i)) - multiply(dunkl(i + 1), s);
}

CherElem CherAlgebra::push_y_through_x(int i, const std::vector<int>& xdeg) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ypush_cache_.find({i, xdeg});
        if (it != ypush_cache_.end()) return it->second;
    }
    CherElem out;
    const std::vector<int> z(n(), 0);
    int j = -1;
    for (int t = n() - 1; t >= 0; --t)
        if (xdeg[t] > 0) {
            j = t;
            break;
        }
    if (j < 0) {
        std::vector<int> b(n(), 0);
        b[i] = 1;
        out.add(CherKey{z, GroupElem::identity(r(), n()), b}, Cyclo(1));
    } else {
        // y_i x^a = x_j (y_i x^{a'}) + [y_i, x_j] x^{a'},  a' = a - e_j
        std::vector<int> rest = xdeg;
        --rest[j];
        out = leftmul_x(j, push_y_through_x(i, rest));
        const CherElem comm = commutator_yx(i, j);
        for (const auto& [key, c] : comm.terms()) {
            // group * x^{a'} = (g . x^{a'}) * g
            const GroupElem& g = key.g;
            std::vector<int> xd(n(), 0);
            Cyclo factor = c;
            for (int t = 0; t < n(); ++t) {
                if (rest[t] == 0) continue;
                auto [img, sc] = g.act_on_dual_basis(t);
                xd[img] += rest[t];
                factor *= sc.pow(rest[t]);
            }
            out.add(CherKey{xd, g, z}, factor);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    ypush_cache_.emplace(std::make_pair(i, xdeg), out);
    return out;
}

CherElem CherAlgebra::leftmul_y(int i, const CherElem& e) const {
    CherElem out;
    for (const auto& [key, c] : e.terms()) {
        CherElem pushed = push_y_through_x(i, key.xdeg);
        // Append the remaining factors g y^b of the original key.
        for (const auto& [pk, pc] : pushed.terms()) {
            // y^{b'} g = g * prod zeta^{-t_j b'_j} * y^{b''}, b''_{w^{-1}(j)} = b'_j
            const GroupElem& g = key.g;
            Perm winv = g.perm().inverse();
            std::vector<int> b2(n(), 0);
            Cyclo factor = c * pc;
            for (int t = 0; t < n(); ++t) {
                if (pk.ydeg[t] == 0) continue;
                b2[winv(t)] += pk.ydeg[t];
                factor *= Cyclo::zeta_pow(r(), -g.torsion()[t]).pow(pk.ydeg[t]);
            }
            for (int t = 0; t < n(); ++t) b2[t] += key.ydeg[t];
            out.add(CherKey{pk.xdeg, pk.g * g, b2}, factor);
        }
    }
    return out;
}

CherElem CherAlgebra::leftmul_group(const GroupElem& g, const CherElem& e) const {
    CherElem out;
    for (const auto& [key, c] : e.terms()) {
        // g x^a = (g . x^a) g
        std::vector<int> xd(n(), 0);
        Cyclo factor = c;
        for (int t = 0; t < n(); ++t) {
            if (key.xdeg[t] == 0) continue;
            auto [img, sc] = g.act_on_dual_basis(t);
            xd[img] += key.xdeg[t];
            factor *= sc.pow(key.xdeg[t]);
        }
        out.add(CherKey{xd, g * key.g, key.ydeg}, factor);
    }
    return out;
}

CherElem CherAlgebra::leftmul_x(int i, const CherElem& e) const {
    CherElem out;
    for (const auto& [key, c] : e.terms()) {
        CherKey k2 = key;
        ++k2.xdeg[i];
        out.add(k2, c);
    }
    return out;
}

CherElem CherAlgebra::multiply(const CherElem& a, const CherElem& b) const {
    CherElem out;
    for (const auto& [key, c] : a.terms()) {
        CherElem acc = b;
        for (int i = 0; i < n(); ++i)
            for (int rep = 0; rep < key.ydeg[i]; ++rep) acc = leftmul_y(i, acc);
        acc = leftmul_group(key.g, acc);
        for (int i = 0; i < n(); ++i)
            for (int rep = 0; rep < key.xdeg[i]; ++rep) acc = leftmul_x(i, acc);
        acc *= c;
        out += acc;
    }
    return out;
}

CherElem CherAlgebra::conjugate(const GroupElem& g, const CherElem& a) const {
    return multiply(multiply(group(g), a), group(g.inverse()));
}

}  // namespace ghk
