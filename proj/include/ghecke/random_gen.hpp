#pragma once

#include "ghecke/cherednik.hpp"
#include "ghecke/ggha.hpp"
#include "ghecke/psmod.hpp"

#include <random>

namespace ghk {

/// Deterministic source of random exact values for the fuzz suites; the
/// seed is part of every run configuration.
class RandomSource {
  public:
    explicit RandomSource(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi);  // inclusive
    Rational rational(int num_bound = 4, int den_bound = 3);
    Rational nonzero_rational(int num_bound = 4, int den_bound = 3);
    Cyclo cyclo(int r, int num_bound = 3);
    Perm perm(int n);
    TChar tchar(int r, int n);
    CherParams cher_params(int r, int n);
    CherElem cher_elem(const CherAlgebra& alg, int terms, int max_deg);
    GghaElem ggha_elem(const GghaAlgebra& alg, int terms, int max_ddeg);
    CChar cchar(int r, int n);

  private:
    std::mt19937 rng_;
};

}  // namespace ghk
