#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lg/alexander.hpp"
#include "lg/families.hpp"
#include "lg/lgcore.hpp"

using namespace lg;

static Rat2 rzero() { return Rat2(Integer(0)); }
static Rat2 rone() { return Rat2(Integer(1)); }

TEST_CASE("half twist coefficients") {
    SUBCASE("zero and one half twists") {
        auto c0 = half_twist_coeffs(0);
        CHECK(c0.x == rzero());
        CHECK(c0.y == rzero());
        CHECK(c0.z == rone());
        auto c1 = half_twist_coeffs(1);
        CHECK(c1.x == rzero());
        CHECK(c1.y == -rone());
        CHECK(c1.z == rzero());
    }
    SUBCASE("cubic recurrence") {
        Rat2 e1{Laurent2::t0() + Laurent2::t1() - Laurent2(1)};
        Rat2 e2{Laurent2::t0() + Laurent2::t1() - Laurent2::t0() * Laurent2::t1()};
        Rat2 e3{Laurent2::t0() * Laurent2::t1()};
        for (int n = -3; n <= 6; ++n) {
            auto a = half_twist_coeffs(n), b = half_twist_coeffs(n + 1),
                 c = half_twist_coeffs(n + 2), d = half_twist_coeffs(n + 3);
            CHECK(d.x == e1 * c.x + e2 * b.x - e3 * a.x);
            CHECK(d.y == e1 * c.y + e2 * b.y - e3 * a.y);
            CHECK(d.z == e1 * c.z + e2 * b.z - e3 * a.z);
        }
    }
}

TEST_CASE("full twist coefficients") {
    SUBCASE("small geometric sums") {
        CHECK(a1_poly(0).is_zero());
        CHECK(a1_poly(1) == Laurent2(1));
        CHECK(a1_poly(2) == Laurent2(1) + Laurent2::t0() * Laurent2::t1());
        CHECK(a1_poly(-1) == -Laurent2::term(1, -1, -1));
    }
    SUBCASE("a1 additivity") {
        for (int m = -3; m <= 3; ++m)
            for (int n = -3; n <= 3; ++n)
                CHECK(a1_poly(m + n) ==
                      a1_poly(m) + Laurent2::term(1, m, m) * a1_poly(n));
    }
    SUBCASE("spans") {
        for (int n = 1; n <= 4; ++n) {
            auto c = full_twist_coeffs(n, TwistRelation::rel3);
            CHECK(Rat2(c.c1).span() == 0);
            CHECK(c.c2.num().span() - c.c2.den().span() == 2);
            CHECK(c.c3.span() == 2);
        }
    }
    SUBCASE("rel2 second coefficient") {
        for (int n = -2; n <= 3; ++n) {
            auto c = full_twist_coeffs(n, TwistRelation::rel2);
            CHECK(c.c2 == rone() - Rat2(a1_poly(n)));
        }
    }
}

TEST_CASE("twist knots") {
    SUBCASE("unknot") { CHECK(lg_twist(0) == Laurent2(1)); }
    SUBCASE("cross-oracle against braid closures") {
        // trefoil and its mirror
        CHECK(lg_twist(1) == lg_invariant(BraidWord::parse("2: -1 -1 -1")));
        // figure eight is amphichiral
        Laurent2 f8 = lg_invariant(BraidWord::parse("3: 1 -2 1 -2"));
        CHECK(lg_twist(-1) == f8);
        CHECK(f8.inverted() == f8);
        // 5_2 knot: the braid closes to the mirror of K_2
        Laurent2 w52 = lg_invariant(BraidWord::parse("3: 1 1 1 2 -1 2"));
        CHECK(lg_twist(2) == w52.inverted());
    }
    SUBCASE("span and swap symmetry") {
        for (int n = -4; n <= 4; ++n) {
            if (n == 0) continue;
            Laurent2 v = lg_twist(n);
            CHECK(v.span() == 4);
            CHECK(v.swapped() == v);
        }
    }
    SUBCASE("antidiagonal evaluation") {
        for (int n = 1; n <= 4; ++n) {
            Laurent1 expect = Laurent1::term(n, 2) - Laurent1(2 * n - 1) +
                              Laurent1::term(n, -2);
            CHECK(lg_twist(n).specialize_antidiag() == expect);
        }
        Laurent1 f8 = alexander_closure(BraidWord::parse("3: 1 -2 1 -2"));
        CHECK(lg_twist(-1).specialize_antidiag() == f8.squared_variable());
    }
}

TEST_CASE("two-bridge links") {
    SUBCASE("single parameter") {
        Laurent2 d1 = lg_two_bridge({{1}});
        Laurent2 expect = -(Laurent2::term(1, -1, 0) - Laurent2(1)) *
                          (Laurent2::term(1, 0, -1) - Laurent2(1));
        CHECK(d1 == expect);
        CHECK(d1.span() == 2);
    }
    SUBCASE("span law and alternating equality over a grid") {
        for (int m = 1; m <= 4; ++m) {
            std::vector<int> b(m, 1);
            while (true) {
                Laurent2 v = lg_two_bridge({b});  // SpanViolation if span != 2m
                auto fg = family_genus(TwoBridgeCode{b});
                CHECK(v.span() == 2 * (2 * fg.g + fg.mu - 1));
                int i = m - 1;
                while (i >= 0 && b[i] == 3) b[i--] = 1;
                if (i < 0) break;
                ++b[i];
            }
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(lg_two_bridge({{}}), FamilySyntaxError);
        CHECK_THROWS_AS(lg_two_bridge({{2, 0}}), FamilySyntaxError);
        CHECK_THROWS_AS(lg_two_bridge({{-1}}), FamilySyntaxError);
    }
}

TEST_CASE("pretzel knots") {
    SUBCASE("closed form") {
        CHECK(lg_pretzel_2m1r(1) == Laurent2(1));
        CHECK(lg_pretzel_2m1r(3) == Laurent2(1));
        CHECK(lg_pretzel_2m1r(5).span() == 4);
        CHECK(lg_pretzel_2m1r(7).span() == 8);
        CHECK(lg_pretzel_2m1r(9).span() == 12);
        CHECK_THROWS_AS(lg_pretzel_2m1r(-3), Unsupported);
        CHECK_THROWS_AS(lg_pretzel_2m1r(4), NotAKnot);
    }
    SUBCASE("swap symmetry of the closed form") {
        for (int r = 5; r <= 9; r += 2) {
            Laurent2 v = lg_pretzel_2m1r(r);
            CHECK(v.swapped() == v);
        }
    }
    SUBCASE("code-level evaluation normalizes") {
        Laurent2 v = lg_pretzel({2, -1, 7});
        CHECK(lg_pretzel({-1, 7, 2}) == v);              // cyclic rotation
        CHECK(lg_pretzel({-2, 1, -7}) == v.inverted());  // mirror
        CHECK(lg_pretzel({4, 1, -1}) == Laurent2(1));    // unknot
        CHECK(lg_pretzel({3, -1, 1}) == Laurent2(1));
        CHECK_THROWS_AS(lg_pretzel({3, 5, 7}), Unsupported);
        CHECK_THROWS_AS(lg_pretzel({2, 4, 3}), NotAKnot);
    }
}

TEST_CASE("family genus") {
    SUBCASE("two-bridge") {
        CHECK(family_genus(TwoBridgeCode{{2, 3}}).g == 1);
        CHECK(family_genus(TwoBridgeCode{{2, 3}}).mu == 1);
        CHECK(family_genus(TwoBridgeCode{{1}}).mu == 2);
        CHECK(family_genus(TwoBridgeCode{{1}}).g == 0);
        CHECK(family_genus(TwoBridgeCode{{1, 1, 1}}).g == 1);
        CHECK(family_genus(TwoBridgeCode{{1, 1, 1, 1}}).g == 2);
    }
    SUBCASE("twist") {
        CHECK(family_genus_twist(0).g == 0);
        CHECK(family_genus_twist(3).g == 1);
        CHECK(family_genus_twist(-2).g == 1);
        CHECK(family_genus_twist(3).mu == 1);
    }
    SUBCASE("pretzel dispatch") {
        CHECK(family_genus(PretzelCode{3, 5, 7}).g == 1);
        CHECK(family_genus(PretzelCode{5, 1, -1}).g == 0);
        CHECK(family_genus(PretzelCode{2, -1, 3}).g == 0);
        CHECK(family_genus(PretzelCode{2, -1, 7}).g == 2);
        CHECK(family_genus(PretzelCode{-2, 1, -7}).g == 2);   // mirror
        CHECK(family_genus(PretzelCode{-1, 7, 2}).g == 2);    // rotation
        CHECK(family_genus(PretzelCode{2, 3, 5}).g == 4);     // same signs
        CHECK(family_genus(PretzelCode{2, 3, -5}).g == 3);    // mixed signs
        CHECK(family_genus(PretzelCode{4, -1, -3}).g == 2);   // same signs, p != 2
        CHECK(family_genus(PretzelCode{4, -1, 5}).g == 2);    // mixed signs, p != 2
        CHECK_THROWS_AS(family_genus(PretzelCode{2, 4, 3}), NotAKnot);
    }
    SUBCASE("pretzel span bound 4g") {
        for (int r = 5; r <= 9; r += 2)
            CHECK(lg_pretzel_2m1r(r).span() <= 4 * family_genus(PretzelCode{2, -1, r}).g);
    }
}

TEST_CASE("family specs") {
    SUBCASE("parsing") {
        auto tw = FamilySpec::parse("twist:-2");
        CHECK(tw.kind == FamilySpec::Kind::twist);
        CHECK(tw.n == -2);
        auto tb = FamilySpec::parse("2bridge:2,3,1");
        CHECK(tb.kind == FamilySpec::Kind::two_bridge);
        CHECK(tb.two_bridge.b == std::vector<int>{2, 3, 1});
        auto pz = FamilySpec::parse("pretzel:2,-1,5");
        CHECK(pz.kind == FamilySpec::Kind::pretzel);
        CHECK(pz.pretzel == PretzelCode{2, -1, 5});
        CHECK_THROWS_AS(FamilySpec::parse("twist"), FamilySyntaxError);
        CHECK_THROWS_AS(FamilySpec::parse("torus:2,3"), FamilySyntaxError);
        CHECK_THROWS_AS(FamilySpec::parse("twist:x"), FamilySyntaxError);
        CHECK_THROWS_AS(FamilySpec::parse("pretzel:1,2"), FamilySyntaxError);
    }
    SUBCASE("evaluation and genus route through the families") {
        CHECK(FamilySpec::parse("twist:1").evaluate() == lg_twist(1));
        CHECK(FamilySpec::parse("2bridge:1").evaluate() == lg_two_bridge({{1}}));
        CHECK(FamilySpec::parse("pretzel:2,-1,5").evaluate() == lg_pretzel_2m1r(5));
        CHECK(FamilySpec::parse("twist:3").genus().g == 1);
        CHECK(FamilySpec::parse("2bridge:1,1").components() == 1);
        CHECK(FamilySpec::parse("2bridge:1").components() == 2);
    }
}
