#include <doctest.h>

#include "symq/gaussian.hpp"

using namespace symq;

namespace {

GaussVector gv(long long are, long long aim, long long bre, long long bim) {
    return GaussVector{{are, aim}, {bre, bim}};
}

}  // namespace

TEST_CASE("quandle operation on (Z[i])^2") {
    // (1,0)*(0,1) = (1,3)
    CHECK(gauss_op(gv(1, 0, 0, 0), gv(0, 0, 1, 0)) == gv(1, 0, 3, 0));
    // x*0 = x
    GaussVector x = gv(7, -2, 3, 11);
    CHECK(gauss_op(x, GaussVector{}) == x);
    CHECK(gauss_form(gv(1, 0, 0, 0), gv(0, 0, 1, 0)) == GaussInt(3, 0));
}

TEST_CASE("inverse operation undoes the operation on random pairs") {
    SampleRng rng(0);
    for (int i = 0; i < 10000; ++i) {
        GaussVector x = gv(rng.draw(-50, 50), rng.draw(-50, 50), rng.draw(-50, 50),
                           rng.draw(-50, 50));
        GaussVector y = gv(rng.draw(-50, 50), rng.draw(-50, 50), rng.draw(-50, 50),
                           rng.draw(-50, 50));
        CHECK(gauss_inv_op(gauss_op(x, y), y) == x);
    }
}

TEST_CASE("3-adic valuation") {
    CHECK(v3(gv(3, 6, 9, 0)) == 1);   // (3+6i, 9)
    CHECK(v3(gv(1, 0, 0, 0)) == 0);
    CHECK(v3(gv(9, 0, 0, 27)) == 2);  // (9, 27i)
    CHECK_THROWS_AS(v3(GaussVector{}), ZeroVector);
}

TEST_CASE("residue reduction") {
    CHECK(residue_bar(gv(3, 0, 0, 6)).r == std::array<int, 4>{1, 0, 0, 2});  // (3, 6i)
    CHECK(residue_bar(gv(1, 0, 1, 0)).r == std::array<int, 4>{1, 0, 1, 0});
    CHECK(residue_bar(gv(2, 2, 0, 0)).r == std::array<int, 4>{2, 2, 0, 0});
    CHECK_THROWS_AS(residue_bar(GaussVector{}), ZeroVector);
    // bar is taken after dividing out 3^v, not the plain residue
    CHECK_FALSE(residue_bar(gv(3, 0, 0, 0)).is_zero());
}

TEST_CASE("orbits of the unit action") {
    ResidueStats stats = run_residue_checks();
    CHECK(stats.nonzero_vectors == 80);
    CHECK(stats.orbit_count == 20);
    CHECK(stats.all_orbits_size_4);

    SUBCASE("orbit representative is invariant on the orbit") {
        for (int idx = 1; idx < 81; ++idx) {
            ResidueVector v;
            int t = idx;
            for (int i = 0; i < 4; ++i) {
                v.r[i] = t % 3;
                t /= 3;
            }
            ResidueVector rep = orbit_rep(v).rep;
            CHECK(orbit_rep(residue_mul_i(v)).rep == rep);
            CHECK(orbit_rep(residue_neg(v)).rep == rep);
            CHECK(rep <= v);
        }
    }
    CHECK_THROWS_AS(orbit_rep(ResidueVector{}), ZeroVector);
}

TEST_CASE("sigma") {
    ResidueStats stats = run_residue_checks();
    CHECK(stats.sigma_square_ok);
    CHECK(stats.sigma_map_ok);

    SUBCASE("sigma(rep) = +i on every representative") {
        for (int idx = 1; idx < 81; ++idx) {
            ResidueVector v;
            int t = idx;
            for (int i = 0; i < 4; ++i) {
                v.r[i] = t % 3;
                t /= 3;
            }
            CHECK(sigma(orbit_rep(v).rep) == kGaussI);
        }
    }
    CHECK_THROWS_AS(sigma(ResidueVector{}), ZeroVector);
}

TEST_CASE("rho") {
    CHECK(rho(GaussVector{}).is_zero());

    SUBCASE("rho multiplies by a unit, so v3 is preserved") {
        GaussVector x = gv(3, 6, 9, 0);
        CHECK(v3(rho(x)) == v3(x));
    }

    SUBCASE("sampled involution and good-involution conditions") {
        SampleStats stats = run_gaussian_samples(10000, 50, 0);
        CHECK(stats.samples == 10000);
        CHECK(stats.involution_failures == 0);
        CHECK(stats.cond1_failures == 0);
        CHECK(stats.cond2_failures == 0);
        CHECK(stats.v3_failures == 0);
        CHECK(stats.bar_failures == 0);
        CHECK(stats.all_passed());
    }

    SUBCASE("tiny run") {
        CHECK(run_gaussian_samples(1, 1, 0).all_passed());
    }
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    SampleRng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        long long va = a.draw(-50, 50);
        CHECK(va == b.draw(-50, 50));
        CHECK(va >= -50);
        CHECK(va <= 50);
    }
}

TEST_CASE("exact arithmetic survives large coefficients") {
    // repeated squaring-scale growth would overflow any fixed-width integer
    GaussVector x = gv(1, 1, 2, -1);
    GaussVector y = gv(5, -3, 4, 7);
    for (int i = 0; i < 12; ++i) x = gauss_op(x, y);
    for (int i = 0; i < 12; ++i) x = gauss_inv_op(x, y);
    CHECK(x == gv(1, 1, 2, -1));
}
