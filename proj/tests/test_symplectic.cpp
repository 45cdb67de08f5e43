#include <doctest.h>

#include "symq/symplectic.hpp"

using namespace symq;

TEST_CASE("defining formula on the Z/9Z example") {
    Ring z9 = Ring::zmod(9);
    GramForm g(z9, {{0, 3}, {6, 0}});
    SymplecticQuandle sq = build_symplectic_quandle(z9, 2, g);
    const FreeModule& m = sq.module;

    int x = static_cast<int>(m.index({1, 0}));
    int y = static_cast<int>(m.index({0, 1}));
    CHECK(m.coords(sq.quandle.op(x, y)) == Vec{1, 3});  // (1,0) + 3*(0,1)
    CHECK(sq.quandle.label(sq.quandle.op(x, y)) == "(1,3)");
    CHECK(m.coords(sq.quandle.inv_op(x, y)) == Vec{1, 6});
    CHECK_FALSE(sq.quandle.is_kei());
}

TEST_CASE("x*0 = x and x*x = x everywhere") {
    for (long long n : {2, 3, 5}) {
        Ring r = Ring::zmod(n);
        SymplecticQuandle sq = build_symplectic_quandle(r, 2, GramForm::standard(r, 2));
        const FiniteQuandle& q = sq.quandle;
        int zero = 0;
        for (int x = 0; x < q.size(); ++x) {
            CHECK(q.op(x, zero) == x);
            CHECK(q.op(x, x) == x);
        }
    }
}

TEST_CASE("zero form gives the trivial quandle") {
    Ring f5 = Ring::zmod(5);
    GramForm z = GramForm::zero(f5, 2);
    SymplecticQuandle sq = build_symplectic_quandle(f5, 2, z);
    CHECK(sq.quandle.is_trivial());
    CHECK(is_trivial_symplectic(sq.module, z));
}

TEST_CASE("triviality detection") {
    Ring f2 = Ring::zmod(2);
    FreeModule m2(f2, 2);
    GramForm s2 = GramForm::standard(f2, 2);
    CHECK_FALSE(is_trivial_symplectic(m2, s2));
    // witness (1,0)*(0,1) = (1,1)
    SymplecticQuandle sq = build_symplectic_quandle(f2, 2, s2);
    CHECK(sq.quandle.op(static_cast<int>(m2.index({1, 0})),
                        static_cast<int>(m2.index({0, 1}))) ==
          static_cast<int>(m2.index({1, 1})));

    Ring z9 = Ring::zmod(9);
    FreeModule m9(z9, 2);
    CHECK_FALSE(is_trivial_symplectic(m9, GramForm(z9, {{0, 3}, {6, 0}})));
}

TEST_CASE("right translations") {
    Ring f2 = Ring::zmod(2);
    SymplecticQuandle sq = build_symplectic_quandle(f2, 2, GramForm::standard(f2, 2));
    const FreeModule& m = sq.module;

    CHECK(right_translation(sq.quandle, 0).is_identity());  // s_0 = id

    // s_{(0,1)} swaps (1,0) <-> (1,1), fixes (0,0) and (0,1)
    Permutation s = right_translation(sq.quandle, static_cast<int>(m.index({0, 1})));
    CHECK(s(static_cast<int>(m.index({1, 0}))) == static_cast<int>(m.index({1, 1})));
    CHECK(s(static_cast<int>(m.index({1, 1}))) == static_cast<int>(m.index({1, 0})));
    CHECK(s(static_cast<int>(m.index({0, 0}))) == static_cast<int>(m.index({0, 0})));
    CHECK(s(static_cast<int>(m.index({0, 1}))) == static_cast<int>(m.index({0, 1})));

    SUBCASE("every s_y is linear and invertible on instances up to 81 elements") {
        std::vector<SymplecticQuandle> instances;
        instances.push_back(sq);
        Ring f3 = Ring::zmod(3);
        instances.push_back(build_symplectic_quandle(f3, 2, GramForm::standard(f3, 2)));
        Ring z9 = Ring::zmod(9);
        instances.push_back(build_symplectic_quandle(z9, 2, GramForm(z9, {{0, 3}, {6, 0}})));
        for (const auto& inst : instances)
            for (int y = 0; y < inst.quandle.size(); ++y) {
                CHECK(right_translation(inst.quandle, y).is_bijection());
                CHECK(right_translation_is_linear(inst, y));
            }
    }
}

TEST_CASE("kei dichotomy over fields") {
    struct Field {
        Ring ring;
        int characteristic;
    };
    std::vector<Field> fields{
        {Ring::zmod(2), 2},           {Ring::zmod(3), 3},
        {Ring::quotient(2, {1, 1, 1}), 2}, {Ring::zmod(5), 5},
        {Ring::quotient(3, {1, 0, 1}), 3},
    };
    for (const Field& f : fields) {
        SymplecticQuandle sq = build_symplectic_quandle(f.ring, 2, GramForm::standard(f.ring, 2));
        REQUIRE(f.ring.characteristic() == f.characteristic);
        CHECK_FALSE(sq.quandle.is_trivial());
        CHECK(sq.quandle.is_kei() == (f.characteristic == 2));
    }
}

TEST_CASE("char-2 rings give keis even with zero divisors") {
    Ring r = Ring::quotient(2, {0, 0, 1});  // (Z/2)[X]/(X^2)
    REQUIRE(r.characteristic() == 2);
    REQUIRE_FALSE(r.is_integral_domain());
    SymplecticQuandle sq = build_symplectic_quandle(r, 2, GramForm::standard(r, 2));
    CHECK(sq.quandle.is_kei());
    CHECK_FALSE(sq.quandle.is_trivial());
}

TEST_CASE("inv_op is the exact inverse of every column") {
    Ring z9 = Ring::zmod(9);
    Ring f3 = Ring::zmod(3);
    for (const SymplecticQuandle& sq :
         {build_symplectic_quandle(z9, 2, GramForm(z9, {{0, 3}, {6, 0}})),
          build_symplectic_quandle(f3, 2, GramForm::standard(f3, 2))}) {
        const FiniteQuandle& q = sq.quandle;
        for (int x = 0; x < q.size(); ++x)
            for (int y = 0; y < q.size(); ++y) {
                CHECK(q.inv_op(q.op(x, y), y) == x);
                CHECK(q.op(q.inv_op(x, y), y) == x);
            }
    }
}

TEST_CASE("dual equals the quandle of the negated form") {
    Ring z9 = Ring::zmod(9);
    GramForm g(z9, {{0, 3}, {6, 0}});
    SymplecticQuandle sq = build_symplectic_quandle(z9, 2, g);
    SymplecticQuandle neg = build_symplectic_quandle(z9, 2, g.negated(z9));
    FiniteQuandle d = sq.quandle.dual();
    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y) CHECK(d.op(x, y) == neg.quandle.op(x, y));
}

TEST_CASE("size cap") {
    Ring f3 = Ring::zmod(3);
    CHECK_THROWS_AS(build_symplectic_quandle(f3, 2, GramForm::standard(f3, 2), 5),
                    SizeCapExceeded);
    CHECK_THROWS_AS(build_symplectic_quandle(f3, 4, GramForm::standard(f3, 2)),
                    DimensionMismatch);
}
