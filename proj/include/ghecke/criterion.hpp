#pragma once

#include "ghecke/cyclo.hpp"
#include "ghecke/refl_group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ghk {

/// Outcome of the matrix-free irreducibility test for M(nu (x) pi).
struct CriterionReport {
    Perm sigma;
    TChar sorted_char;  // mu_pi
    /// Pairs (i,j), i<j 0-based, in the stabilizer of mu_pi with
    /// (^sigma nu)_i - (^sigma nu)_j = +/- r*kbar0.
    std::vector<std::pair<int, int>> p_set;
    bool simple = true;  // iff p_set empty

    struct Witness {
        int i, j;
        Cyclo diff;  // (^sigma nu)_i - (^sigma nu)_j
        int sign;    // +1 or -1 against r*kbar0
    };
    std::vector<Witness> witnesses;
};

/// P_pi(^sigma nu) and the verdict of the irreducibility criterion.
CriterionReport criterion_p_set(const std::vector<Cyclo>& nu, const TChar& pi, const Cyclo& kbar0);

/// Equivalent sigma-free formulation: reducible iff some u < v has
/// pi_u = pi_v and nu_u - nu_v = +/- r*kbar0.
bool criterion_reducible_unsorted(const std::vector<Cyclo>& nu, const TChar& pi, const Cyclo& kbar0);

/// True iff the verdict of criterion_p_set(^w nu, ^w pi) is the same for
/// every w in S_n (and matches the unsorted form).
bool sigma_independence(const std::vector<Cyclo>& nu, const TChar& pi, const Cyclo& kbar0);

/// One representative per S_n-orbit of T-characters (sorted n-indices),
/// listed by r-composition of n.
std::vector<TChar> all_orbit_reps(int r, int n);

/// One grid instance of the criterion-vs-oracle comparison.
struct SweepRow {
    std::vector<Cyclo> nu;
    TChar pi;
    Cyclo kbar0;
    bool criterion_simple = true;
    char oracle = '?';  // 's' simple, 'r' reducible, 'x' refused
    std::vector<int> factors;
    std::string note;

    bool agree() const { return oracle != 'x' && criterion_simple == (oracle == 's'); }
};

struct SweepSpec {
    int r = 2;
    int n = 2;
    Cyclo kbar0 = Cyclo(1);
    std::vector<Rational> grid;  // nu ranges over grid^n
    std::vector<TChar> chars;    // empty means all orbit representatives
    int desk_bound = 24;
    bool with_factors = true;
    int jobs = 1;
};

struct SweepSummary {
    int instances = 0;
    int agree = 0;
    int disagree = 0;
    int refused = 0;
    std::vector<SweepRow> rows;
};

/// Theorem-level agreement table: criterion verdict vs the brute-force
/// simplicity oracle on every (nu, pi) of the grid.
SweepSummary theorem13_sweep(const SweepSpec& spec);

}  // namespace ghk
