#pragma once

#include "ghecke/cyclo.hpp"
#include "ghecke/perm.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ghk {

/// Element of G(r,1,n) = T x| S_n as (torsion, permutation): the matrix
/// sending e_i to zeta^(torsion[w(i)]) e_{w(i)}. Torsion entries live in
/// Z/r. Composition matches matrix multiplication.
class GroupElem {
  public:
    GroupElem() : r_(1) {}
    GroupElem(int r, std::vector<int> torsion, Perm perm);
    static GroupElem identity(int r, int n);
    /// theta_i^t: diagonal zeta^t in slot i (0-based).
    static GroupElem theta(int r, int n, int i, int t = 1);
    /// s_{i,j}^[m]: the reflection fixing zeta^m e_i + e_j and negating
    /// zeta^m e_i - e_j; equals theta_i^m theta_j^{-m} (i j).
    static GroupElem refl_s(int r, int n, int i, int j, int m = 0);
    static GroupElem permutation(int r, int n, const Perm& w);

    int r() const { return r_; }
    int n() const { return perm_.size(); }
    const std::vector<int>& torsion() const { return torsion_; }
    const Perm& perm() const { return perm_; }

    GroupElem operator*(const GroupElem& o) const;
    GroupElem inverse() const;
    bool is_identity() const;
    Cyclo det() const;

    /// Action on the basis vector e_i: returns (image index, scalar).
    std::pair<int, Cyclo> act_on_basis(int i) const;
    /// Action on the dual basis: g . alpha_i = scalar * alpha_j.
    std::pair<int, Cyclo> act_on_dual_basis(int i) const;

    bool operator==(const GroupElem& o) const { return r_ == o.r_ && torsion_ == o.torsion_ && perm_ == o.perm_; }
    bool operator!=(const GroupElem& o) const { return !(*this == o); }
    bool operator<(const GroupElem& o) const;

    std::string str() const;

  private:
    int r_;
    std::vector<int> torsion_;
    Perm perm_;
};

/// All r^n n! elements (enumeration order: torsion-major within S_n order).
std::vector<GroupElem> full_group(int r, int n);

/// A character of T = (Z/r)^n given by its n-index: theta_i -> zeta^idx[i].
class TChar {
  public:
    TChar() : r_(1) {}
    TChar(int r, std::vector<int> idx);
    static TChar trivial(int r, int n);

    int r() const { return r_; }
    int n() const { return static_cast<int>(idx_.size()); }
    const std::vector<int>& index() const { return idx_; }
    int operator[](int i) const { return idx_[i]; }

    /// Value on the monomial theta^t.
    Cyclo value(const std::vector<int>& t) const;
    /// r-index (multiplicities of each value 0..r-1); sums to n.
    std::vector<int> r_index() const;
    /// Index transport (^w pi)_i = pi_{w^{-1}(i)}.
    TChar twist(const Perm& w) const;
    /// Pointwise negation mod r (the inverse character).
    TChar inverse_char() const;

    bool operator==(const TChar& o) const { return r_ == o.r_ && idx_ == o.idx_; }
    bool operator!=(const TChar& o) const { return !(*this == o); }
    bool operator<(const TChar& o) const { return std::pair(r_, idx_) < std::pair(o.r_, o.idx_); }

  private:
    int r_;
    std::vector<int> idx_;
};

/// Output of sorting a T-character into its orbit representative.
struct SortedChar {
    Perm sigma;            // ^sigma pi = mu (twist convention above)
    TChar mu;              // sorted n-index (0^a0, 1^a1, ...)
    std::vector<std::pair<int, int>> blocks;  // inclusive index ranges [lo,hi], 0-based
};

/// Stable sort of pi's n-index. The returned sigma satisfies
/// ^sigma pi = mu and every inversion {i,j} of sigma has pi_i != pi_j.
SortedChar sort_char(const TChar& pi);

/// Transpositions (u,v), u < v 0-based, with pi_u = pi_v (generating S_n(pi)).
std::vector<std::pair<int, int>> stabilizer_transpositions(const TChar& pi);

/// All elements of the stabilizer S_n(pi), sorted by (length, lex).
std::vector<Perm> stabilizer_elements(const TChar& pi);

/// Minimal-length coset representatives of S_n / S_n(pi), w_1 = id first,
/// then by (length, lex). Size n!/prod(multiplicities!).
std::vector<Perm> coset_reps(const TChar& pi);

}  // namespace ghk
