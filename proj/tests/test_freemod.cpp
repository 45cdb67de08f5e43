#include <doctest.h>

#include "oracle.hpp"
#include "symq/freemod.hpp"

using namespace symq;

TEST_CASE("vector indexing round-trips") {
    FreeModule m(Ring::zmod(9), 2);
    CHECK(m.size() == 81);
    for (long long i = 0; i < m.size(); ++i) CHECK(m.index(m.coords(i)) == i);
    // coordinate 0 is least significant
    CHECK(m.coords(1) == Vec{1, 0});
    CHECK(m.coords(9) == Vec{0, 1});
    CHECK(m.label(m.coords(28)) == "(1,3)");
}

TEST_CASE("gram form validation") {
    Ring f3 = Ring::zmod(3);
    CHECK_NOTHROW(GramForm(f3, {{0, 1}, {2, 0}}));  // 2 = -1 mod 3
    CHECK_THROWS_AS(GramForm(f3, {{1, 0}, {0, 0}}), FormNotAlternating);
    CHECK_THROWS_AS(GramForm(f3, {{0, 1}, {1, 0}}), FormNotAlternating);
    CHECK_THROWS_AS(GramForm(f3, {{0, 1}}), DimensionMismatch);
    CHECK_THROWS_AS(GramForm::standard(f3, 3), DimensionMismatch);
    // char 2: skew coincides with symmetric, diagonal must still vanish
    Ring f2 = Ring::zmod(2);
    CHECK_NOTHROW(GramForm(f2, {{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(GramForm(f2, {{1, 1}, {1, 0}}), FormNotAlternating);
}

TEST_CASE("form evaluation") {
    Ring z9 = Ring::zmod(9);
    FreeModule m(z9, 2);
    GramForm g(z9, {{0, 3}, {6, 0}});  // 3(ad - bc)
    CHECK(form_eval(m, g, {1, 0}, {0, 1}) == 3);
    CHECK(form_eval(m, g, {0, 1}, {1, 0}) == 6);

    Ring f3 = Ring::zmod(3);
    FreeModule m3(f3, 2);
    GramForm std3 = GramForm::standard(f3, 2);
    CHECK(form_eval(m3, std3, {1, 0}, {0, 1}) == 1);

    SUBCASE("alternating and antisymmetric on every input") {
        for (long long x = 0; x < m.size(); ++x) {
            CHECK(form_eval(m, g, m.coords(x), m.coords(x)) == 0);
            for (long long y = 0; y < m.size(); ++y)
                CHECK(form_eval(m, g, m.coords(x), m.coords(y)) ==
                      z9.neg(form_eval(m, g, m.coords(y), m.coords(x))));
        }
    }

    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(form_eval(m, g, {1, 0, 0}, {0, 1}), DimensionMismatch);
    }
}

TEST_CASE("bilinearity, exhaustive on small modules") {
    Ring f3 = Ring::zmod(3);
    FreeModule m(f3, 2);
    GramForm g = GramForm::standard(f3, 2);
    for (long long x = 0; x < m.size(); ++x)
        for (long long x2 = 0; x2 < m.size(); ++x2)
            for (long long y = 0; y < m.size(); ++y) {
                Vec vx = m.coords(x), vx2 = m.coords(x2), vy = m.coords(y);
                CHECK(form_eval(m, g, m.add(vx, vx2), vy) ==
                      f3.add(form_eval(m, g, vx, vy), form_eval(m, g, vx2, vy)));
            }
    for (RElem r = 0; r < f3.size(); ++r)
        for (long long x = 0; x < m.size(); ++x)
            for (long long y = 0; y < m.size(); ++y) {
                Vec vx = m.coords(x), vy = m.coords(y);
                CHECK(form_eval(m, g, m.scale(r, vx), vy) ==
                      f3.mul(r, form_eval(m, g, vx, vy)));
            }
}

TEST_CASE("nondegeneracy") {
    Ring f3 = Ring::zmod(3);
    FreeModule m3(f3, 2);
    CHECK(is_nondegenerate(m3, GramForm::standard(f3, 2)));

    Ring f2 = Ring::zmod(2);
    FreeModule m2(f2, 2);
    CHECK_FALSE(is_nondegenerate(m2, GramForm::zero(f2, 2)));

    // (Z/9Z)^2 with 3(ad-bc): the radical is 3M, so the form is degenerate
    Ring z9 = Ring::zmod(9);
    FreeModule m9(z9, 2);
    GramForm g9(z9, {{0, 3}, {6, 0}});
    auto kernel = testing::form_kernel_full_scan(m9, g9);
    CHECK(kernel.size() == 9);  // all of 3M, e.g. (3,0)
    CHECK(std::find(kernel.begin(), kernel.end(), m9.index({3, 0})) != kernel.end());
    CHECK_FALSE(is_nondegenerate(m9, g9));

    SUBCASE("predicate agrees with the full-pair kernel scan everywhere") {
        auto check_instance = [](const Ring& r, int rank, const GramForm& g) {
            FreeModule m(r, rank);
            CHECK(is_nondegenerate(m, g) == (testing::form_kernel_full_scan(m, g).size() == 1));
        };
        check_instance(f3, 2, GramForm::standard(f3, 2));
        check_instance(f2, 2, GramForm::zero(f2, 2));
        check_instance(z9, 2, g9);
        check_instance(z9, 2, GramForm::standard(z9, 2));
        check_instance(f2, 3, GramForm(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
    }
}

TEST_CASE("unimodularity") {
    Ring f3 = Ring::zmod(3);
    FreeModule m3(f3, 2);
    CHECK(is_unimodular(m3, GramForm::standard(f3, 2)));

    Ring z9 = Ring::zmod(9);
    FreeModule m9(z9, 2);
    GramForm g9(z9, {{0, 3}, {6, 0}});
    CHECK(form_determinant(z9, g9) == 0);  // det = -18 = 0 mod 9
    CHECK_FALSE(is_unimodular(m9, g9));

    SUBCASE("matches bijectivity of x -> <x,->") {
        CHECK(testing::unimodular_by_image_count(m3, GramForm::standard(f3, 2)));
        CHECK_FALSE(testing::unimodular_by_image_count(m9, g9));
        CHECK(is_unimodular(m9, GramForm::standard(z9, 2)));
        CHECK(testing::unimodular_by_image_count(m9, GramForm::standard(z9, 2)));
    }

    SUBCASE("unimodular implies nondegenerate; both coincide on finite rings") {
        std::vector<std::pair<Ring, GramForm>> instances;
        instances.emplace_back(f3, GramForm::standard(f3, 2));
        instances.emplace_back(z9, g9);
        instances.emplace_back(z9, GramForm::standard(z9, 2));
        Ring f2 = Ring::zmod(2);
        instances.emplace_back(f2, GramForm::zero(f2, 2));
        Ring z15 = Ring::zmod(15);
        instances.emplace_back(z15, GramForm::scaled(z15, 2, 3));
        for (const auto& [ring, form] : instances) {
            FreeModule m(ring, 2);
            bool uni = is_unimodular(m, form);
            bool nondeg = is_nondegenerate(m, form);
            if (uni) CHECK(nondeg);
            CHECK(uni == nondeg);  // injective = bijective between finite equal-size sets
        }
    }
}

TEST_CASE("hyperbolic pair search") {
    Ring f3 = Ring::zmod(3);
    FreeModule m3(f3, 2);
    auto p3 = find_hyperbolic_pair(m3, GramForm::standard(f3, 2));
    REQUIRE(p3.has_value());
    CHECK(p3->first == Vec{1, 0});
    CHECK(p3->second == Vec{0, 1});

    Ring z9 = Ring::zmod(9);
    FreeModule m9(z9, 2);
    CHECK_FALSE(find_hyperbolic_pair(m9, GramForm(z9, {{0, 3}, {6, 0}})).has_value());

    // scaled form: <(1,0),(0,1)> = 2, unit, so the witness is (2^{-1}(1,0),(0,1))
    Ring f5 = Ring::zmod(5);
    FreeModule m5(f5, 2);
    auto p5 = find_hyperbolic_pair(m5, GramForm(f5, {{0, 2}, {3, 0}}));
    REQUIRE(p5.has_value());
    CHECK(p5->first == Vec{3, 0});
    CHECK(p5->second == Vec{0, 1});
    CHECK(form_eval(m5, GramForm(f5, {{0, 2}, {3, 0}}), p5->first, p5->second) == f5.one());

    SUBCASE("none iff the form never takes the value 1") {
        auto nowhere_one = [](const FreeModule& m, const GramForm& g) {
            for (long long x = 0; x < m.size(); ++x)
                for (long long y = 0; y < m.size(); ++y)
                    if (form_eval(m, g, m.coords(x), m.coords(y)) == m.ring().one())
                        return false;
            return true;
        };
        GramForm g9(z9, {{0, 3}, {6, 0}});
        CHECK(nowhere_one(m9, g9) == !find_hyperbolic_pair(m9, g9).has_value());
        GramForm s9 = GramForm::standard(z9, 2);
        CHECK(nowhere_one(m9, s9) == !find_hyperbolic_pair(m9, s9).has_value());
        GramForm z2zero = GramForm::zero(f3, 2);
        CHECK(nowhere_one(m3, z2zero) == !find_hyperbolic_pair(m3, z2zero).has_value());
    }
}
