#include "ghecke/linalg.hpp"
#include "ghecke/random_gen.hpp"
#include "ghecke/refl_group.hpp"

#include <doctest.h>

#include <set>

using namespace ghk;

namespace {

CMat matrix_of(const GroupElem& g) {
    CMat m = czeros(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i) {
        auto [j, sc] = g.act_on_basis(i);
        m(j, i) = sc;
    }
    return m;
}

}  // namespace

TEST_CASE("reflection constructors") {
    GroupElem s = GroupElem::refl_s(4, 3, 0, 1, 0);
    CHECK(s.torsion() == std::vector<int>{0, 0, 0});
    CHECK(s.perm() == Perm::transposition(3, 0, 1));

    GroupElem s1 = GroupElem::refl_s(4, 4, 0, 1, 1);
    CHECK(s1.torsion() == std::vector<int>{1, 3, 0, 0});
    CHECK(s1.perm() == Perm::transposition(4, 0, 1));

    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                GroupElem refl = GroupElem::refl_s(3, 3, i, j, m);
                CHECK((refl * refl).is_identity());
            }
    CHECK_THROWS_AS(GroupElem::refl_s(3, 3, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("reflection matrix fixes zeta^m v_i + v_j and negates zeta^m v_i - v_j") {
    const int r = 6, n = 2;
    for (int m = 0; m < r; ++m) {
        CMat g = matrix_of(GroupElem::refl_s(r, n, 0, 1, m));
        CVec plus = czeros(n, 1), minus = czeros(n, 1);
        plus(0) = Cyclo::zeta_pow(r, m);
        plus(1) = Cyclo(1);
        minus(0) = Cyclo::zeta_pow(r, m);
        minus(1) = Cyclo(-1);
        CHECK(is_zero(CMat(g * plus - plus)));
        CHECK(is_zero(CMat(g * minus + minus)));
    }
}

TEST_CASE("composition matches matrix multiplication") {
    RandomSource rnd(11);
    const int r = 4, n = 3;
    for (int it = 0; it < 100; ++it) {
        std::vector<int> t1(n), t2(n);
        for (auto& v : t1) v = rnd.uniform(0, r - 1);
        for (auto& v : t2) v = rnd.uniform(0, r - 1);
        GroupElem a(r, t1, rnd.perm(n)), b(r, t2, rnd.perm(n));
        CHECK(is_zero(CMat(matrix_of(a * b) - matrix_of(a) * matrix_of(b))));
        CHECK((a * a.inverse()).is_identity());
        CHECK((a.inverse() * a).is_identity());
    }
}

TEST_CASE("perm combinatorics") {
    CHECK(Perm::identity(4).inversions().empty());
    CHECK(Perm::identity(4).length() == 0);
    CHECK(Perm::longest(3).length() == 3);
    CHECK(Perm::longest(3).inversions().size() == 3);
    Perm s = Perm::transposition(3, 0, 1);
    auto inv = s.inversions();
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == std::pair<int, int>{0, 1});
    // reduced words multiply back, with the right length
    RandomSource rnd(3);
    for (int it = 0; it < 50; ++it) {
        Perm w = rnd.perm(5);
        auto word = w.reduced_word();
        CHECK(static_cast<int>(word.size()) == w.length());
        Perm acc = Perm::identity(5);
        for (int i : word) acc = acc * Perm::simple(5, i);
        CHECK(acc == w);
    }
}

TEST_CASE("determinant is a homomorphism") {
    RandomSource rnd(5);
    const int r = 3, n = 3;
    for (int it = 0; it < 50; ++it) {
        std::vector<int> t1(n), t2(n);
        for (auto& v : t1) v = rnd.uniform(0, r - 1);
        for (auto& v : t2) v = rnd.uniform(0, r - 1);
        GroupElem a(r, t1, rnd.perm(n)), b(r, t2, rnd.perm(n));
        CHECK(a.det() * b.det() == (a * b).det());
    }
    CHECK(GroupElem::theta(3, 2, 0).det() == Cyclo::zeta_pow(3, 1));
    CHECK(GroupElem::refl_s(3, 2, 0, 1, 0).det() == Cyclo(-1));
}

TEST_CASE("conjugation transports theta indices") {
    const int r = 3, n = 4;
    for (const Perm& w : symmetric_group(n)) {
        GroupElem gw = GroupElem::permutation(r, n, w);
        for (int i = 0; i < n; ++i)
            CHECK(gw * GroupElem::theta(r, n, i) * gw.inverse() == GroupElem::theta(r, n, w(i)));
    }
}

TEST_CASE("theta_1 and adjacent transpositions generate G, |G| = r^n n!") {
    const int r = 3, n = 3;
    std::vector<GroupElem> gens = {GroupElem::theta(r, n, 0)};
    for (int i = 0; i + 1 < n; ++i) gens.push_back(GroupElem::permutation(r, n, Perm::simple(n, i)));
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<GroupElem> frontier = {GroupElem::identity(r, n)};
    seen.insert({frontier[0].torsion(), frontier[0].perm().images()});
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const GroupElem& g : frontier)
            for (const GroupElem& h : gens) {
                GroupElem gh = g * h;
                if (seen.insert({gh.torsion(), gh.perm().images()}).second) next.push_back(gh);
            }
        frontier = std::move(next);
    }
    CHECK(seen.size() == 27u * 6u);
    CHECK(full_group(r, n).size() == 27u * 6u);
}

TEST_CASE("sort_char") {
    SUBCASE("constant character") {
        SortedChar sc = sort_char(TChar(3, {0, 0, 0, 0}));
        CHECK(sc.sigma.is_identity());
        CHECK(sc.blocks == std::vector<std::pair<int, int>>{{0, 3}});
    }
    SUBCASE("all distinct") {
        SortedChar sc = sort_char(TChar(3, {2, 0, 1}));
        CHECK(sc.mu.index() == std::vector<int>{0, 1, 2});
        CHECK(sc.blocks.size() == 3);
        CHECK(TChar(3, {2, 0, 1}).twist(sc.sigma) == sc.mu);
    }
    SUBCASE("interleaved") {
        TChar pi(2, {1, 0, 1, 0});
        SortedChar sc = sort_char(pi);
        CHECK(sc.mu.index() == std::vector<int>{0, 0, 1, 1});
        CHECK(sc.blocks == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
        CHECK(pi.twist(sc.sigma) == sc.mu);
    }
    SUBCASE("inversions of sigma only cross distinct values") {
        // The stable sort makes every inversion pair {i,j} of sigma (the
        // permutation with ^sigma pi = mu) satisfy pi_i != pi_j; this is
        // the property cor5 consumes via prop4's R(w^{-1}) hypothesis.
        RandomSource rnd(17);
        for (int it = 0; it < 200; ++it) {
            int n = rnd.uniform(1, 6), r = rnd.uniform(1, 4);
            TChar pi = rnd.tchar(r, n);
            SortedChar sc = sort_char(pi);
            CHECK(pi.twist(sc.sigma) == sc.mu);
            for (auto [i, j] : sc.sigma.inversions()) CHECK(pi[i] != pi[j]);
        }
    }
}

TEST_CASE("stabilizer and cosets") {
    SUBCASE("constant: everything stabilizes") {
        TChar pi(2, {0, 0, 0});
        CHECK(stabilizer_transpositions(pi).size() == 3);
        CHECK(stabilizer_elements(pi).size() == 6);
        CHECK(coset_reps(pi).size() == 1);
    }
    SUBCASE("all distinct: trivial stabilizer") {
        TChar pi(3, {0, 1, 2});
        CHECK(stabilizer_transpositions(pi).empty());
        CHECK(coset_reps(pi).size() == 6);
    }
    SUBCASE("(0,0,1): S_2 x S_1") {
        TChar pi(2, {0, 0, 1});
        auto gens = stabilizer_transpositions(pi);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0] == std::pair<int, int>{0, 1});
        CHECK(stabilizer_elements(pi).size() == 2);
        auto reps = coset_reps(pi);
        CHECK(reps.size() == 3);
        CHECK(reps[0].is_identity());
    }
}

TEST_CASE("twist convention composes") {
    RandomSource rnd(23);
    for (int it = 0; it < 100; ++it) {
        TChar pi = rnd.tchar(4, 4);
        Perm a = rnd.perm(4), b = rnd.perm(4);
        CHECK(pi.twist(b).twist(a) == pi.twist(a * b));
    }
}
