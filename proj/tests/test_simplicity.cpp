#include "ghecke/psmod.hpp"
#include "ghecke/random_gen.hpp"
#include "ghecke/simplicity.hpp"

#include <doctest.h>

using namespace ghk;

namespace {

ModuleRep conjugated(const ModuleRep& m, const CMat& p, const CMat& pinv) {
    ModuleRep out = m;
    for (auto& g : out.gen_mats) g = pinv * g * p;
    return out;
}

}  // namespace

TEST_CASE("spin") {
    GghaAlgebra alg(2, 2, Cyclo(1));
    SUBCASE("one-dimensional module") {
        CChar gt{{Cyclo(5)}, TChar(2, {1})};
        GghaAlgebra a1(2, 1, Cyclo(1));
        ModuleRep m = principal_series(a1, gt);
        CVec v = czeros(1, 1);
        v(0) = Cyclo(3);
        CHECK(spin(m, v).dim() == 1);
    }
    SUBCASE("simple module: any vector spins to the whole space") {
        CChar gt{{Cyclo(Rational(1, 3)), Cyclo(1)}, TChar(2, {0, 1})};
        ModuleRep m = principal_series(alg, gt);
        RandomSource rnd(99);
        for (int it = 0; it < 10; ++it) {
            CVec v = czeros(2, 1);
            v(0) = Cyclo(rnd.rational());
            v(1) = Cyclo(rnd.rational());
            if (v(0).is_zero() && v(1).is_zero()) continue;
            CHECK(spin(m, v).dim() == 2);
        }
    }
    SUBCASE("the predicted eigenvector spins to a proper line") {
        CChar gt{{Cyclo(2), Cyclo(0)}, TChar(2, {0, 0})};
        ModuleRep m = principal_series(alg, gt);
        // weight ^s(gt) eigenvector
        CMat e = joint_eigenspace(m, weight_of_twist(gt, Perm::simple(2, 0)));
        REQUIRE(e.cols() == 1);
        CHECK(spin(m, e.col(0)).dim() == 1);
    }
    SUBCASE("zero vector is rejected") {
        CChar gt{{Cyclo(0), Cyclo(0)}, TChar(2, {0, 0})};
        ModuleRep m = principal_series(alg, gt);
        CHECK_THROWS_AS(spin(m, czeros(2, 1)), std::invalid_argument);
    }
}

TEST_CASE("is_simple worked examples") {
    GghaAlgebra alg(2, 2, Cyclo(1));
    SUBCASE("trivial stabilizer: simple for any nu") {
        RandomSource rnd(123);
        for (int it = 0; it < 5; ++it) {
            CChar gt{{Cyclo(rnd.rational()), Cyclo(rnd.rational())}, TChar(2, {0, 1})};
            ModuleRep m = principal_series(alg, gt);
            SimplicityReport rep = is_simple(m);
            CHECK(rep.simple());
        }
    }
    SUBCASE("nu = (2,0) on the constant character is reducible with factors {1,1}") {
        CChar gt{{Cyclo(2), Cyclo(0)}, TChar(2, {0, 0})};
        ModuleRep m = principal_series(alg, gt);
        SimplicityReport rep = is_simple(m);
        REQUIRE_FALSE(rep.simple());
        CHECK(rep.witness.has_value());
        CHECK(rep.witness_basis.cols() == 1);
        CHECK(composition_factor_dims(m) == std::vector<int>{1, 1});
    }
}

TEST_CASE("verdict is stable under exact basis change") {
    GghaAlgebra alg(2, 3, Cyclo(1));
    RandomSource rnd(56);
    std::vector<CChar> cases = {
        {{Cyclo(2), Cyclo(0), Cyclo(1)}, TChar(2, {0, 0, 1})},           // reducible
        {{Cyclo(Rational(1, 5)), Cyclo(1), Cyclo(-1)}, TChar(2, {0, 0, 1})},  // simple
    };
    for (const CChar& gt : cases) {
        ModuleRep m = principal_series(alg, gt);
        bool base = is_simple(m).simple();
        for (int it = 0; it < 3; ++it) {
            CMat p = czeros(m.dim, m.dim);
            // random invertible matrix: start from identity and shear
            for (int i = 0; i < m.dim; ++i) p(i, i) = Cyclo(1);
            for (int k = 0; k < 6; ++k) {
                int i = rnd.uniform(0, m.dim - 1), j = rnd.uniform(0, m.dim - 1);
                if (i != j) p(i, j) += Cyclo(rnd.rational(2, 2));
            }
            auto pinv = inverse(p);
            REQUIRE(pinv);
            CHECK(is_simple(conjugated(m, p, *pinv)).simple() == base);
        }
    }
}

TEST_CASE("length equals length of the dual") {
    GghaAlgebra alg(2, 2, Cyclo(1));
    for (auto nu : std::vector<std::pair<long, long>>{{2, 0}, {0, 0}, {1, 0}, {3, 1}}) {
        CChar gt{{Cyclo(nu.first), Cyclo(nu.second)}, TChar(2, {0, 0})};
        ModuleRep m = principal_series(alg, gt);
        ModuleRep du = dual_module(alg, m);
        CHECK(composition_factor_dims(m).size() == composition_factor_dims(du).size());
    }
}

TEST_CASE("endomorphism count matches factor count on a semisimple instance") {
    // nu = (2,0) at pi = (0,0): two distinct 1-dimensional factors; the
    // module is in fact semisimple here iff Hom(M,M) is 2-dimensional.
    GghaAlgebra alg(2, 2, Cyclo(1));
    CChar gt{{Cyclo(1), Cyclo(0)}, TChar(2, {0, 1})};  // distinct T-characters: semisimple split
    ModuleRep m = principal_series(alg, gt);
    auto homs = intertwiners(m, m);
    auto dims = composition_factor_dims(m);
    if (dims.size() == 1) {
        CHECK(homs.size() == 1);
    } else {
        CHECK(homs.size() >= dims.size());
    }
}

TEST_CASE("degenerate eigenspaces") {
    SUBCASE("scalar frame with a swap: pencil grid finds the diagonal line") {
        // D = 0, t = id, s = swap on dimension 2: submodules are the two
        // s-eigenlines; the C-eigenspace is fat (the whole space).
        ModuleRep m;
        m.dim = 2;
        m.r = 2;
        m.n = 2;
        m.kbar0 = Cyclo(0);
        m.algebra = "ggha";
        m.basis = {"e1", "e2"};
        m.gen_names = {"D1", "t1", "s1"};
        CMat d = czeros(2, 2), t = cidentity(2), s = czeros(2, 2);
        s(0, 1) = Cyclo(1);
        s(1, 0) = Cyclo(1);
        m.gen_mats = {d, t, s};
        CWeight w;
        w.dvals = {Cyclo(0)};
        w.tvals = {Cyclo(1)};
        m.cweights = {w};
        SimplicityReport rep = is_simple(m);
        REQUIRE_FALSE(rep.simple());
        CHECK(composition_factor_dims(m) == std::vector<int>{1, 1});
    }
    SUBCASE("2-dimensional simple with scalar frame: settled without refusal") {
        // The standard representation of S_3 (simple over Q) with a zero
        // commutative frame; eigenspace is fat but no line is invariant.
        ModuleRep m;
        m.dim = 2;
        m.r = 1;
        m.n = 3;
        m.kbar0 = Cyclo(0);
        m.algebra = "gha_a";
        m.basis = {"e1", "e2"};
        m.gen_names = {"D1", "s1", "s2"};
        CMat d = czeros(2, 2);
        CMat s1 = czeros(2, 2), s2 = czeros(2, 2);
        // s1 = [[-1,1],[0,1]], s2 = [[1,0],[1,-1]] satisfy the braid relation
        s1(0, 0) = Cyclo(-1);
        s1(0, 1) = Cyclo(1);
        s1(1, 1) = Cyclo(1);
        s2(0, 0) = Cyclo(1);
        s2(1, 0) = Cyclo(1);
        s2(1, 1) = Cyclo(-1);
        m.gen_mats = {d, s1, s2};
        CWeight w;
        w.dvals = {Cyclo(0)};
        m.cweights = {w};
        SimplicityReport rep = is_simple(m);
        CHECK(rep.simple());
        CHECK(composition_factor_dims(m) == std::vector<int>{2});
    }
}

TEST_CASE("desk-scale refusal") {
    GghaAlgebra alg(2, 2, Cyclo(1));
    CChar gt{{Cyclo(2), Cyclo(0)}, TChar(2, {0, 0})};
    ModuleRep m = principal_series(alg, gt);
    CHECK_THROWS_AS(composition_factor_dims(m, 1), OracleRefusal);
}

TEST_CASE("submodule and quotient constructions re-verify stability") {
    GghaAlgebra alg(2, 2, Cyclo(1));
    CChar gt{{Cyclo(2), Cyclo(0)}, TChar(2, {0, 0})};
    ModuleRep m = principal_series(alg, gt);
    SimplicityReport rep = is_simple(m);
    REQUIRE_FALSE(rep.simple());
    ModuleRep sub = submodule_rep(m, rep.witness_basis);
    ModuleRep quo = quotient_rep(m, rep.witness_basis);
    CHECK(sub.dim + quo.dim == m.dim);
    CHECK(is_simple(sub).simple());
    CHECK(is_simple(quo).simple());
    // a non-stable subspace is rejected
    CMat bad = czeros(2, 1);
    bad(0) = Cyclo(1);
    bool stable = true;
    try {
        submodule_rep(m, bad);
    } catch (const std::logic_error&) {
        stable = false;
    }
    // (1,0) = 1 (x) m spans M: not stable
    CHECK_FALSE(stable);
}
