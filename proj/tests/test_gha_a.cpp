#include "ghecke/gha_a.hpp"
#include "ghecke/psmod.hpp"
#include "ghecke/random_gen.hpp"
#include "ghecke/simplicity.hpp"

#include <doctest.h>

using namespace ghk;

TEST_CASE("principal series shapes") {
    SUBCASE("all singleton blocks: 1-dimensional, D acts by lambda") {
        GhaAlgebra alg(3, {{0, 0}, {1, 1}, {2, 2}}, Cyclo(2));
        std::vector<Cyclo> lambda = {Cyclo(1), Cyclo(Rational(1, 2)), Cyclo(-3)};
        ModuleRep m = principal_series_a(alg, lambda);
        CHECK(m.dim == 1);
        for (int j = 0; j < 3; ++j) CHECK(m.matrix("D" + std::to_string(j + 1))(0, 0) == lambda[j]);
    }
    SUBCASE("one block of size 2: the classical 2x2 shape") {
        Cyclo c(2);
        GhaAlgebra alg(2, {{0, 1}}, c);
        std::vector<Cyclo> lambda = {Cyclo(5), Cyclo(3)};
        ModuleRep m = principal_series_a(alg, lambda);
        REQUIRE(m.dim == 2);
        // basis {1, s}; D_1 * 1 = lambda_1 * 1; D_1 * s = s D_2 - c = lambda_2 s - c
        const CMat& d1 = m.matrix("D1");
        CHECK(d1(0, 0) == lambda[0]);
        CHECK(d1(1, 1) == lambda[1]);
        CHECK(d1(0, 1) == -c);
        CHECK(d1(1, 0).is_zero());
        const CMat& d2 = m.matrix("D2");
        CHECK(d2(0, 0) == lambda[1]);
        CHECK(d2(1, 1) == lambda[0]);
        CHECK(d2(0, 1) == c);
        // s is the swap matrix
        const CMat& s = m.matrix("s1");
        CHECK(s(0, 0).is_zero());
        CHECK(s(0, 1) == Cyclo(1));
        // relation check: s D_1 = D_2 s - c
        CHECK(is_zero(CMat(s * d1 - (d2 * s - c * cidentity(2)))));
    }
    SUBCASE("weights are the orbit {^w lambda}") {
        GhaAlgebra alg(3, {{0, 2}}, Cyclo(1));
        std::vector<Cyclo> lambda = {Cyclo(0), Cyclo(2), Cyclo(5)};
        ModuleRep m = principal_series_a(alg, lambda);
        auto mults = weight_multiplicities(m);
        int total = 0;
        for (auto& [w, d] : mults) total += d;
        CHECK(total == 6);
        CHECK(mults.size() == 6);  // distinct coordinates: six distinct weights
    }
}

TEST_CASE("kr_set") {
    SUBCASE("boundary lambda(alpha) = c") {
        GhaAlgebra alg(2, {{0, 1}}, Cyclo(1));
        auto ps = kr_set(alg, {Cyclo(1), Cyclo(0)});
        REQUIRE(ps.size() == 1);
        CHECK(ps[0] == std::pair<int, int>{0, 1});
    }
    SUBCASE("zero weight with c != 0 is simple") {
        GhaAlgebra alg(2, {{0, 1}}, Cyclo(1));
        CHECK(kr_set(alg, {Cyclo(0), Cyclo(0)}).empty());
    }
    SUBCASE("(5,3) with c = 2 is reducible, confirmed by the oracle") {
        GhaAlgebra alg(2, {{0, 1}}, Cyclo(2));
        std::vector<Cyclo> lambda = {Cyclo(5), Cyclo(3)};
        REQUIRE(kr_set(alg, lambda).size() == 1);
        ModuleRep m = principal_series_a(alg, lambda);
        CHECK_FALSE(is_simple(m).simple());
    }
}

TEST_CASE("KR criterion agrees with the oracle on integer grids") {
    SUBCASE("single block of size 2, c in {1, 2}") {
        for (long cval : {1L, 2L}) {
            GhaAlgebra alg(2, {{0, 1}}, Cyclo(cval));
            for (int a = -3; a <= 3; ++a)
                for (int b = -3; b <= 3; ++b) {
                    std::vector<Cyclo> lambda = {Cyclo(a), Cyclo(b)};
                    bool kr_simple = kr_set(alg, lambda).empty();
                    ModuleRep m = principal_series_a(alg, lambda);
                    REQUIRE(kr_simple == is_simple(m).simple());
                }
        }
    }
    SUBCASE("single block of size 3") {
        GhaAlgebra alg(3, {{0, 2}}, Cyclo(1));
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                for (int c = -2; c <= 2; ++c) {
                    std::vector<Cyclo> lambda = {Cyclo(a), Cyclo(b), Cyclo(c)};
                    bool kr_simple = kr_set(alg, lambda).empty();
                    ModuleRep m = principal_series_a(alg, lambda);
                    REQUIRE(kr_simple == is_simple(m).simple());
                }
    }
    SUBCASE("blocks (2,1)") {
        GhaAlgebra alg(3, {{0, 1}, {2, 2}}, Cyclo(1));
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) {
                std::vector<Cyclo> lambda = {Cyclo(a), Cyclo(b), Cyclo(1)};
                bool kr_simple = kr_set(alg, lambda).empty();
                ModuleRep m = principal_series_a(alg, lambda);
                REQUIRE(kr_simple == is_simple(m).simple());
            }
    }
}

TEST_CASE("twist invariance M(lambda) ~ ^w M(lambda) (block group)") {
    GhaAlgebra alg(3, {{0, 2}}, Cyclo(1));
    RandomSource rnd(808);
    for (int it = 0; it < 5; ++it) {
        std::vector<Cyclo> lambda = {Cyclo(rnd.rational()), Cyclo(rnd.rational()), Cyclo(rnd.rational())};
        ModuleRep m = principal_series_a(alg, lambda);
        for (const Perm& w : alg.group()) {
            ModuleRep tw = twist_module_a(alg, m, w);
            CHECK(isomorphic(m, tw));
            // the stated map t_g -> t_{wg}
            CMat X = czeros(m.dim, m.dim);
            for (int c = 0; c < m.dim; ++c) {
                Perm img = w * alg.group()[c];
                for (int rr = 0; rr < m.dim; ++rr)
                    if (alg.group()[rr] == img) X(rr, c) = Cyclo(1);
            }
            for (size_t g = 0; g < m.gen_names.size(); ++g)
                REQUIRE(is_zero(CMat(X * m.gen_mats[g] - tw.gen_mats[g] * X)));
        }
    }
}

TEST_CASE("simple principal series detect their weight orbit (desk-scale Remark)") {
    GhaAlgebra alg(2, {{0, 1}}, Cyclo(1));
    std::vector<Cyclo> lambda = {Cyclo(Rational(1, 3)), Cyclo(2)};
    ModuleRep m = principal_series_a(alg, lambda);
    REQUIRE(is_simple(m).simple());
    // in-orbit gamma: isomorphic
    std::vector<Cyclo> swapped = {lambda[1], lambda[0]};
    CHECK(isomorphic(m, principal_series_a(alg, swapped)));
    // off-orbit gamma: no intertwiners at all
    std::vector<Cyclo> off = {lambda[0] + Cyclo(1), lambda[1]};
    CHECK(intertwiners(m, principal_series_a(alg, off)).empty());
    // off-orbit but reducible-locus-free shifted pair
    std::vector<Cyclo> off2 = {lambda[0], lambda[1] + Cyclo(Rational(1, 7))};
    CHECK_FALSE(isomorphic(m, principal_series_a(alg, off2)));
}

TEST_CASE("block-respecting input validation") {
    CHECK_THROWS_AS(GhaAlgebra(3, {{0, 1}}, Cyclo(1)), std::invalid_argument);          // gap
    CHECK_THROWS_AS(GhaAlgebra(3, {{0, 1}, {1, 2}}, Cyclo(1)), std::invalid_argument);  // overlap
    GhaAlgebra ok(3, {{0, 1}, {2, 2}}, Cyclo(1));
    CHECK(ok.group().size() == 2);
    CHECK(ok.simple_positions() == std::vector<int>{0});
    CHECK_THROWS_AS(principal_series_a(ok, {Cyclo(1)}), std::invalid_argument);
}
