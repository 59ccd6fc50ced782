#pragma once

#include "ghecke/cyclo.hpp"
#include "ghecke/linalg.hpp"
#include "ghecke/refl_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghk {

/// Candidate character of the commutative frame: values on D_1..D_n and,
/// for H_k(r,n)-modules, on theta_1..theta_n (empty for type-A modules).
struct CWeight {
    std::vector<Cyclo> dvals;
    std::vector<Cyclo> tvals;

    bool operator==(const CWeight& o) const { return dvals == o.dvals && tvals == o.tvals; }
};

/// A finite-dimensional representation given by one exact matrix per
/// generator. Generators are named "D1".."Dn" (commutative frame),
/// "t1".."tn" (theta's, also commutative frame), "s1".."s{n-1}" (simple
/// transpositions). cweights lists candidate C-characters with
/// multiplicity; every actual weight of the module occurs in it (checked
/// by the simplicity oracle via a generalized-eigenspace dimension count).
struct ModuleRep {
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<std::string> gen_names;
    std::vector<CMat> gen_mats;
    std::vector<CWeight> cweights;

    // Owning-algebra parameters, echoed into serializations.
    int r = 1;
    int n = 1;
    Cyclo kbar0;
    std::string algebra;  // "ggha" or "gha_a"

    const CMat& matrix(const std::string& name) const;
    bool has_generator(const std::string& name) const;
    /// Indices of the commutative-frame generators (D* and t*).
    std::vector<int> cgen_indices() const;

    /// Applies the weight to a commutative generator by name.
    static Cyclo weight_value(const CWeight& w, const std::string& gen_name);
};

/// rho(a) for a in the span of products of named generators: evaluates a
/// word of generator names.
CMat rep_word(const ModuleRep& m, const std::vector<std::string>& word);

/// Checks every defining relation the generator matrices must satisfy is
/// the caller's business; this verifies the commutative frame commutes.
bool cframe_commutes(const ModuleRep& m);

}  // namespace ghk
