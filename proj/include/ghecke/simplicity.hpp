#pragma once

#include "ghecke/linalg.hpp"
#include "ghecke/module_rep.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghk {

/// Raised when the oracle cannot decide within its configured fallbacks
/// (degenerate eigenspace beyond the pencil search, or desk-scale bound
/// exceeded). Deliberately distinct from a wrong answer.
struct OracleRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimplicityReport {
    enum class Verdict { Simple, Reducible };
    Verdict verdict = Verdict::Simple;
    /// How the verdict was certified: "eigenvector-spin-full", "norton",
    /// "pencil" for simple; for reducible a short witness description.
    std::string certificate;
    /// For reducible: a vector generating a proper submodule, plus the
    /// spun submodule basis (columns).
    std::optional<CVec> witness;
    CMat witness_basis;
    /// Multiset of composition factor dimensions; {dim} for simple
    /// verdicts, filled by composition_factor_dims otherwise.
    std::vector<int> factor_dims;

    bool simple() const { return verdict == Verdict::Simple; }
};

/// Smallest generator-stable subspace containing v (v != 0 required).
RowSpace spin(const ModuleRep& m, const CVec& v);

/// Exact irreducibility decision. Requires the commutative frame to
/// commute and m.cweights to cover every weight (both verified).
SimplicityReport is_simple(const ModuleRep& m);

/// Multiset (sorted) of composition factor dimensions; refuses above the
/// desk-scale bound.
std::vector<int> composition_factor_dims(const ModuleRep& m, int desk_bound = 24);

/// The composition factors themselves, outermost-first.
std::vector<ModuleRep> composition_factors(const ModuleRep& m, int desk_bound = 24);

/// Restriction of the action to a stable subspace (columns of basis).
ModuleRep submodule_rep(const ModuleRep& m, const CMat& basis);
/// Action on m / span(basis).
ModuleRep quotient_rep(const ModuleRep& m, const CMat& basis);

/// Joint eigenspace of the commutative frame for one candidate weight.
CMat joint_eigenspace(const ModuleRep& m, const CWeight& w);
/// Joint generalized eigenspace.
CMat joint_generalized_eigenspace(const ModuleRep& m, const CWeight& w);

/// dim Hom-style sanity helper: number of distinct weights with nonzero
/// generalized eigenspace, with dimensions.
std::vector<std::pair<CWeight, int>> weight_multiplicities(const ModuleRep& m);

}  // namespace ghk
