#pragma once

#include "ghecke/gha_a.hpp"
#include "ghecke/ggha.hpp"
#include "ghecke/module_rep.hpp"

#include <string>
#include <vector>

namespace ghk {

/// Character gamma (x) mu of the commutative subalgebra C = S(V_0) (x) CT:
/// gamma_i is the value on D_i, mu the T-character.
struct CChar {
    std::vector<Cyclo> gamma;
    TChar mu;

    int n() const { return static_cast<int>(gamma.size()); }
    /// Diagonal twist ^w(gamma (x) mu).
    CChar twist(const Perm& w) const;
    /// Value on the monomial theta^t D^a.
    Cyclo value(const std::vector<int>& tpow, const std::vector<int>& ddeg) const;
    bool operator==(const CChar& o) const { return gamma == o.gamma && mu == o.mu; }
};

/// The principal series module M(gamma~) = H_k(r,n) (x)_C C m, with basis
/// {w (x) m : w in S_n} sorted by (length, lex). Generators D_i, theta_i
/// and the simple transpositions; C-generators come out upper triangular
/// in this order with diagonal ^w(gamma~).
ModuleRep principal_series(const GghaAlgebra& alg, const CChar& gt);

/// One T-isotypic piece E_j of a principal series for nu (x) pi.
struct IsotypicPiece {
    TChar character;          // ^{w_j} pi
    Perm rep;                 // the coset representative w_j
    std::vector<int> indices;  // basis indices spanning E_j
};

/// Isotypic decomposition of the T-action: M = (+)_j E_j with
/// dim E_j = |S_n(pi)|, E_1 spanned by {w (x) m : w in S_n(pi)}.
/// Throws if the T-matrices fail to commute.
std::vector<IsotypicPiece> t_isotypic(const GghaAlgebra& alg, const ModuleRep& m, const CChar& gt);

/// The candidate weight ^w(gamma~) as concrete values on D's and theta's.
CWeight weight_of_twist(const CChar& gt, const Perm& w);

/// rho extended to arbitrary algebra elements.
CMat rep_of_elem(const ModuleRep& m, const GghaElem& a);
CMat rep_of_elem(const ModuleRep& m, const GhaElem& a);

/// Twist by Int(w): generator g acts by rho(w g w^{-1}).
ModuleRep twist_module(const GghaAlgebra& alg, const ModuleRep& m, const Perm& w);
/// Same for a type-A module; w must lie in the block group.
ModuleRep twist_module_a(const GhaAlgebra& alg, const ModuleRep& m, const Perm& w);
/// Twist by the automorphism delta.
ModuleRep delta_twist_module(const GghaAlgebra& alg, const ModuleRep& m);
/// Dual module: rho*(g) = rho(iota(g))^T on the dual basis.
ModuleRep dual_module(const GghaAlgebra& alg, const ModuleRep& m);

/// gamma~* with M(gamma~)* ~= M(gamma~*): (-^{w0}gamma) (x) (^{w0}mu)^{-1}.
CChar dual_character(const CChar& gt);

/// Basis of Hom(M, N): all X with X rho_M(g) = rho_N(g) X for every
/// common generator name.
std::vector<CMat> intertwiners(const ModuleRep& m, const ModuleRep& n);

/// True if some member of the Hom-space basis (or combination) is
/// invertible; for Hom spanned by one X this is just invertibility of X.
bool isomorphic(const ModuleRep& m, const ModuleRep& n);

/// Restriction of E_1 to a type-A module: requires mu = mu_pi sorted;
/// substitutes the scalar T-action and returns the block-algebra module
/// with multiplicity c = r*kbar0. Entrywise equal to
/// principal_series_a(blocks(mu), gamma).
ModuleRep e1_as_gha(const GghaAlgebra& alg, const CChar& gt);

/// The E_1 piece as a module over H_k(pi) (generators: all D_i, theta_i,
/// and the transpositions generating S_n(pi)).
ModuleRep e1_module(const GghaAlgebra& alg, const CChar& gt);

}  // namespace ghk
