#pragma once

#include "ghecke/cyclo.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<ghk::Cyclo> {
    using Self = ghk::Cyclo;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static inline Self epsilon() { return Self(0); }
    static inline Self dummy_precision() { return Self(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ghk {

using CMat = Eigen::Matrix<Cyclo, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<Cyclo, Eigen::Dynamic, 1>;

CMat cidentity(int n);
CMat czeros(int rows, int cols);

bool is_zero(const CMat& m);

/// In-place reduced row echelon form over Q(zeta); returns pivot columns.
std::vector<int> rref(CMat& m);

int rank(CMat m);

/// Columns form a basis of the right kernel {x : m x = 0}.
CMat kernel(const CMat& m);

/// Solves m x = b; empty if inconsistent.
std::optional<CVec> solve(const CMat& m, const CVec& b);

/// Inverse of a square matrix; empty if singular.
std::optional<CMat> inverse(const CMat& m);

/// A growing subspace of row vectors kept in reduced echelon form;
/// the workhorse of submodule spinning.
class RowSpace {
  public:
    explicit RowSpace(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the basis; returns true if the space grew.
    bool insert(CVec v);
    bool contains(CVec v) const;
    bool contains_all(const CMat& columns) const;

    /// Basis as matrix columns (ambient x dim), unit-pivot echelon rows.
    CMat basis() const;

  private:
    int ambient_;
    std::vector<CVec> rows_;    // echelon basis, pivot entries 1
    std::vector<int> pivots_;   // pivot position of each row, increasing order not enforced
    void reduce(CVec& v) const;
};

}  // namespace ghk
