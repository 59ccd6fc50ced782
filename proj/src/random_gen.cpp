#include "ghecke/random_gen.hpp"

#include <algorithm>
#include <numeric>

namespace ghk {

int RandomSource::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
}

Rational RandomSource::rational(int num_bound, int den_bound) {
    Rational v(uniform(-num_bound, num_bound), uniform(1, den_bound));
    v.canonicalize();
    return v;
}

Rational RandomSource::nonzero_rational(int num_bound, int den_bound) {
    Rational v = rational(num_bound, den_bound);
    while (v == 0) v = rational(num_bound, den_bound);
    return v;
}

Cyclo RandomSource::cyclo(int r, int num_bound) {
    std::vector<Rational> c(totient(r));
    for (auto& v : c) v = rational(num_bound);
    return Cyclo(r, std::move(c));
}

Perm RandomSource::perm(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[uniform(0, i)]);
    return Perm(std::move(img));
}

TChar RandomSource::tchar(int r, int n) {
    std::vector<int> idx(n);
    for (auto& v : idx) v = uniform(0, r - 1);
    return TChar(r, std::move(idx));
}

CherParams RandomSource::cher_params(int r, int n) {
    std::vector<Cyclo> k;
    for (int t = 1; t < r; ++t) k.push_back(Cyclo(rational()));
    return CherParams(r, n, std::move(k), Cyclo(nonzero_rational()));
}

CherElem RandomSource::cher_elem(const CherAlgebra& alg, int terms, int max_deg) {
    CherElem out;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> xd(alg.n()), yd(alg.n()), tor(alg.n());
        int xbudget = uniform(0, max_deg), ybudget = uniform(0, max_deg);
        for (int b = 0; b < xbudget; ++b) ++xd[uniform(0, alg.n() - 1)];
        for (int b = 0; b < ybudget; ++b) ++yd[uniform(0, alg.n() - 1)];
        for (auto& v : tor) v = uniform(0, alg.r() - 1);
        out += alg.monomial(xd, GroupElem(alg.r(), tor, perm(alg.n())), yd, Cyclo(rational()));
    }
    return out;
}

GghaElem RandomSource::ggha_elem(const GghaAlgebra& alg, int terms, int max_ddeg) {
    GghaElem out;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> dd(alg.n()), tp(alg.n());
        int budget = uniform(0, max_ddeg);
        for (int b = 0; b < budget; ++b) ++dd[uniform(0, alg.n() - 1)];
        for (auto& v : tp) v = uniform(0, alg.r() - 1);
        out += alg.monomial(perm(alg.n()), tp, dd, Cyclo(rational()));
    }
    return out;
}

CChar RandomSource::cchar(int r, int n) {
    CChar out;
    for (int i = 0; i < n; ++i) out.gamma.push_back(Cyclo(rational()));
    out.mu = tchar(r, n);
    return out;
}

}  // namespace ghk
