#pragma once

#include "ghecke/cherednik.hpp"
#include "ghecke/cyclo.hpp"
#include "ghecke/perm.hpp"
#include "ghecke/refl_group.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace ghk {

/// PBW monomial w theta^t D^a of the generalized graded Hecke algebra:
/// S_n part leftmost, then T monomial, then commuting D monomial.
struct GghaKey {
    Perm w;
    std::vector<int> tpow;  // exponents of theta_1..theta_n in Z/r
    std::vector<int> ddeg;  // D-multidegree in N^n

    bool operator<(const GghaKey& o) const;
    bool operator==(const GghaKey& o) const { return w == o.w && tpow == o.tpow && ddeg == o.ddeg; }
    int dtotal() const;
};

/// Element of H_k(r,n) in PBW normal form.
class GghaElem {
  public:
    using Terms = std::map<GghaKey, Cyclo>;

    GghaElem() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const GghaKey& key, const Cyclo& c);
    Cyclo coeff(const GghaKey& key) const;

    GghaElem& operator+=(const GghaElem& o);
    GghaElem& operator-=(const GghaElem& o);
    GghaElem& operator*=(const Cyclo& c);
    friend GghaElem operator+(GghaElem a, const GghaElem& b) { return a += b; }
    friend GghaElem operator-(GghaElem a, const GghaElem& b) { return a -= b; }
    friend GghaElem operator*(const Cyclo& c, GghaElem a) { return a *= c; }
    GghaElem operator-() const;

    bool operator==(const GghaElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const GghaElem& o) const { return !(*this == o); }

    int ddegree() const;
    std::string str() const;

  private:
    Terms terms_;
};

/// Which descent is peeled when commuting a D past a permutation; the
/// normal form is independent of the choice (tested).
enum class WordStrategy { RightmostDescent, LeftmostDescent };

/// The generalized graded Hecke algebra H_k(r,n) as a standalone
/// normal-form engine. The simple-reflection/D cross-rule constant is the
/// one exported by CherAlgebra::cross_constant:
///   s_i D_i = D_{i+1} s_i - ktilde_{i,i+1},
/// with ktilde_{(u,v)} = kbar0 * sum_{m=0}^{r-1} theta_u^m theta_v^{-m}.
class GghaAlgebra {
  public:
    GghaAlgebra(int r, int n, Cyclo kbar0, WordStrategy strategy = WordStrategy::RightmostDescent);

    int r() const { return r_; }
    int n() const { return n_; }
    const Cyclo& kbar0() const { return kbar0_; }

    GghaElem zero() const { return GghaElem(); }
    GghaElem one() const { return scalar(Cyclo(1)); }
    GghaElem scalar(const Cyclo& c) const;
    GghaElem d(int i) const;
    GghaElem theta(int i, int t = 1) const;
    GghaElem perm(const Perm& w) const;
    /// t_g for g = (torsion, w): the monomial w' theta^{t'} with the same
    /// matrix semantics as GroupElem (w' = w, t' = torsion transported).
    GghaElem group(const GroupElem& g) const;
    GghaElem monomial(const Perm& w, const std::vector<int>& tpow, const std::vector<int>& ddeg, const Cyclo& c) const;

    /// ktilde_{(i,j)} as a CT element.
    GghaElem ktilde(int i, int j) const;

    GghaElem multiply(const GghaElem& a, const GghaElem& b) const;

    /// Lemma-style one-step closed form for w * (sum_j coeffs[j] D_j):
    ///   w zeta = w(zeta) w + sum_{{i,j} in R(w^{-1})} (c'_i - c'_j) (i,j) w ktilde_{w^{-1}(i), w^{-1}(j)}
    /// with c' the coefficients of w(zeta). Must equal multiply(perm(w), zeta).
    GghaElem commute_closed_form(const Perm& w, const std::vector<Cyclo>& coeffs) const;

    /// True iff z commutes with D_1..D_n, theta_1 and all (i,i+1).
    bool is_central(const GghaElem& z) const;

    /// The automorphism delta (theta -> det(theta) theta) and the involutive
    /// anti-automorphism iota (D -> -D, g -> det(g) g^{-1}).
    GghaElem delta(const GghaElem& a) const;
    GghaElem iota(const GghaElem& a) const;

  private:
    int r_, n_;
    Cyclo kbar0_;
    WordStrategy strategy_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Perm>, GghaElem> dpush_cache_;

    // D_j * w in normal form.
    GghaElem push_d_through_perm(int j, const Perm& w) const;
    GghaElem leftmul_d(int j, const GghaElem& e) const;
    GghaElem leftmul_theta(const std::vector<int>& tpow, const GghaElem& e) const;
    GghaElem leftmul_perm(const Perm& w, const GghaElem& e) const;
};

/// The realization psi: H_k(r,n) -> H(G,k), e_i -> D_i, t_g -> g.
/// Requires matching (r, n) and cher.params().kbar0 == ggha kbar0 for the
/// image to satisfy the same relations.
CherElem psi(const CherAlgebra& cher, const GghaElem& a);

/// Elementary symmetric polynomial e_k(D_1..D_n) as a GghaElem.
GghaElem elementary_symmetric_d(const GghaAlgebra& alg, int k);

}  // namespace ghk
