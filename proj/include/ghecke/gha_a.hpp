#pragma once

#include "ghecke/cyclo.hpp"
#include "ghecke/module_rep.hpp"
#include "ghecke/perm.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace ghk {

/// PBW monomial t_w lambda^a of the classical graded Hecke algebra.
struct GhaKey {
    Perm w;
    std::vector<int> deg;

    bool operator<(const GhaKey& o) const { return w != o.w ? w < o.w : deg < o.deg; }
    bool operator==(const GhaKey& o) const { return w == o.w && deg == o.deg; }
};

class GhaElem {
  public:
    using Terms = std::map<GhaKey, Cyclo>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const GhaKey& key, const Cyclo& c);

    GhaElem& operator+=(const GhaElem& o);
    GhaElem& operator-=(const GhaElem& o);
    GhaElem& operator*=(const Cyclo& c);
    friend GhaElem operator+(GhaElem a, const GhaElem& b) { return a += b; }
    friend GhaElem operator-(GhaElem a, const GhaElem& b) { return a -= b; }
    bool operator==(const GhaElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const GhaElem& o) const { return !(*this == o); }

  private:
    Terms terms_;
};

/// Graded Hecke algebra of the Weyl group A_{b1-1} x A_{b2-1} x ... given
/// by a block partition of {1..n} into intervals, with constant
/// multiplicity c on every root. Cross rule (matching the quotient of the
/// generalized algebra by Ker mu, where c = r*kbar0):
///   s_i D_i = D_{i+1} s_i - c   for block-interior i.
class GhaAlgebra {
  public:
    GhaAlgebra(int n, std::vector<std::pair<int, int>> blocks, Cyclo c);

    int n() const { return n_; }
    const Cyclo& c() const { return c_; }
    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
    /// 0-based positions i such that (i,i+1) is inside a block.
    const std::vector<int>& simple_positions() const { return simples_; }
    /// All elements of the block Weyl group, sorted by (length, lex).
    const std::vector<Perm>& group() const { return group_; }

    GhaElem one() const { return scalar(Cyclo(1)); }
    GhaElem scalar(const Cyclo& v) const;
    GhaElem d(int i) const;
    GhaElem perm(const Perm& w) const;
    GhaElem monomial(const Perm& w, const std::vector<int>& deg, const Cyclo& v) const;

    GhaElem multiply(const GhaElem& a, const GhaElem& b) const;

  private:
    int n_;
    std::vector<std::pair<int, int>> blocks_;
    Cyclo c_;
    std::vector<int> simples_;
    std::vector<Perm> group_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Perm>, GhaElem> dpush_cache_;

    GhaElem push_d_through_perm(int j, const Perm& w) const;
    GhaElem leftmul_d(int j, const GhaElem& e) const;
    GhaElem leftmul_perm(const Perm& w, const GhaElem& e) const;
};

/// Principal series module M(lambda): basis {t_w : w in W} sorted by
/// (length, lex); generators D_1..D_n and the block-interior simple
/// reflections.
ModuleRep principal_series_a(const GhaAlgebra& alg, const std::vector<Cyclo>& lambda);

/// Kriloff-Ram set P(lambda): positive roots eps_i - eps_j (i < j in one
/// block) with lambda_i - lambda_j = +/- c. M(lambda) is simple iff empty.
std::vector<std::pair<int, int>> kr_set(const GhaAlgebra& alg, const std::vector<Cyclo>& lambda);

}  // namespace ghk
