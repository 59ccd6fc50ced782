#pragma once

#include "ghecke/cyclo.hpp"
#include "ghecke/refl_group.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace ghk {

/// G-invariant parameter function of the rational Cherednik algebra
/// H(G,k): k_t on the classes xi_i^t (t = 1..r-1) and kbar0 on all
/// s_{u,v}^{[m]}.
struct CherParams {
    int r = 1;
    int n = 1;
    std::vector<Cyclo> k;  // size r-1; k[t-1] is k_t
    Cyclo kbar0;

    CherParams() = default;
    CherParams(int r_, int n_, std::vector<Cyclo> k_, Cyclo kbar0_);
    static CherParams zero(int r, int n);
};

/// PBW monomial x^a g y^b of H(G,k): x-multidegree in alpha_1..alpha_n,
/// group element, y-multidegree in v_1..v_n.
struct CherKey {
    std::vector<int> xdeg;
    GroupElem g;
    std::vector<int> ydeg;

    bool operator<(const CherKey& o) const;
    bool operator==(const CherKey& o) const { return xdeg == o.xdeg && g == o.g && ydeg == o.ydeg; }
    int xtotal() const;
    int ytotal() const;
};

/// Element of H(G,k) in PBW normal form: finite Cyclo-combination of
/// CherKeys. Zero coefficients are never stored.
class CherElem {
  public:
    using Terms = std::map<CherKey, Cyclo>;

    CherElem() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const CherKey& key, const Cyclo& c);
    Cyclo coeff(const CherKey& key) const;

    CherElem& operator+=(const CherElem& o);
    CherElem& operator-=(const CherElem& o);
    CherElem& operator*=(const Cyclo& c);
    friend CherElem operator+(CherElem a, const CherElem& b) { return a += b; }
    friend CherElem operator-(CherElem a, const CherElem& b) { return a -= b; }
    friend CherElem operator*(const Cyclo& c, CherElem a) { return a *= c; }
    CherElem operator-() const;

    bool operator==(const CherElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const CherElem& o) const { return !(*this == o); }

    /// Max over terms of |xdeg| + |ydeg|.
    int total_degree() const;
    /// True if every term has xdeg = ydeg = 0.
    bool is_group_algebra() const;
    /// True if additionally every group part has trivial permutation.
    bool is_ct_algebra() const;

    std::string str() const;

  private:
    Terms terms_;
};

/// The symplectic reflection algebra H(G,k) of G(r,1,n) as a rewriting
/// engine producing PBW normal forms. The ground-truth oracle for the
/// cross-relation constants used by the graded Hecke engine.
class CherAlgebra {
  public:
    explicit CherAlgebra(CherParams p);

    const CherParams& params() const { return p_; }
    int r() const { return p_.r; }
    int n() const { return p_.n; }

    CherElem zero() const { return CherElem(); }
    CherElem one() const;
    CherElem scalar(const Cyclo& c) const;
    /// alpha_i (x-generator), 0-based.
    CherElem x(int i) const;
    /// v_i (y-generator), 0-based.
    CherElem y(int i) const;
    CherElem group(const GroupElem& g) const;
    CherElem monomial(const std::vector<int>& xdeg, const GroupElem& g, const std::vector<int>& ydeg, const Cyclo& c) const;

    /// [v_i, alpha_j] as a group-algebra element (the defining relation).
    CherElem commutator_yx(int i, int j) const;

    /// ktilde_{(i,j)} = kbar0 * sum_m theta_i^m theta_j^{-m}, a CT element.
    CherElem ktilde(int i, int j) const;

    /// Dunkl-type element D_j = v_j alpha_j - sum_{i<j} ktilde_{(i,j)} s_{i,j}^{[0]}.
    CherElem dunkl(int j) const;

    /// X_i = s_i D_i - D_{i+1} s_i with s_i = s_{i,i+1}^{[0]}; a CT element,
    /// exported as the cross-relation constant of the graded Hecke engine.
    CherElem cross_constant(int i) const;

    CherElem multiply(const CherElem& a, const CherElem& b) const;
    /// g a g^{-1}.
    CherElem conjugate(const GroupElem& g, const CherElem& a) const;

  private:
    CherParams p_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, CherElem> comm_cache_;
    mutable std::map<std::pair<int, std::vector<int>>, CherElem> ypush_cache_;

    // y_i * x^a in normal form.
    CherElem push_y_through_x(int i, const std::vector<int>& xdeg) const;
    // Left multiplications onto an already-normal element.
    CherElem leftmul_y(int i, const CherElem& e) const;
    CherElem leftmul_group(const GroupElem& g, const CherElem& e) const;
    CherElem leftmul_x(int i, const CherElem& e) const;
};

}  // namespace ghk
