#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lg/alexander.hpp"

#include <random>

using namespace lg;

static BraidWord random_word(std::mt19937& rng, int max_n = 4, int max_len = 8) {
    std::uniform_int_distribution<int> sn(2, max_n);
    int n = sn(rng);
    std::uniform_int_distribution<int> sl(0, max_len);
    std::uniform_int_distribution<int> sg(1, n - 1);
    std::uniform_int_distribution<int> ss(0, 1);
    std::vector<int> ls;
    int len = sl(rng);
    for (int i = 0; i < len; ++i) ls.push_back(ss(rng) ? sg(rng) : -sg(rng));
    return BraidWord(n, std::move(ls));
}

TEST_CASE("burau representation") {
    SUBCASE("identity word") {
        BurauMatrix m = burau_rep(BraidWord(4));
        CHECK(m == BurauMatrix(3));
    }
    SUBCASE("homomorphism: word times inverse word") {
        std::mt19937 rng(31);
        for (int it = 0; it < 25; ++it) {
            BraidWord b = random_word(rng);
            std::vector<int> ls = b.letters();
            auto inv = b.inversed().letters();
            ls.insert(ls.end(), inv.begin(), inv.end());
            CHECK(burau_rep(BraidWord(b.strands(), ls)) ==
                  BurauMatrix(b.strands() - 1));
        }
    }
    SUBCASE("braid relation") {
        CHECK(burau_rep(BraidWord::parse("3: 1 2 1")) ==
              burau_rep(BraidWord::parse("3: 2 1 2")));
        CHECK(burau_rep(BraidWord::parse("4: 1 3")) ==
              burau_rep(BraidWord::parse("4: 3 1")));
    }
}

TEST_CASE("alexander polynomial golden values") {
    SUBCASE("unknot presentations") {
        CHECK(alexander_closure(BraidWord::parse("1:")) == Laurent1(1));
        CHECK(alexander_closure(BraidWord::parse("2: 1")) == Laurent1(1));
        CHECK(alexander_closure(BraidWord::parse("3: 1 2")) == Laurent1(1));
    }
    SUBCASE("trefoil") {
        Laurent1 expect = Laurent1::t() - Laurent1(1) + Laurent1::term(1, -1);
        CHECK(alexander_closure(BraidWord::parse("2: 1 1 1")) == expect);
        CHECK(alexander_closure(BraidWord::parse("2: -1 -1 -1")) == expect);
    }
    SUBCASE("figure eight") {
        // sigma1 sigma2^-1 sigma1 sigma2^-1: Delta = -t + 3 - t^-1
        Laurent1 d = alexander_closure(BraidWord::parse("3: 1 -2 1 -2"));
        Laurent1 expect = -Laurent1::t() + Laurent1(3) - Laurent1::term(1, -1);
        CHECK(d == expect);
    }
    SUBCASE("whitehead double has trivial alexander polynomial") {
        BraidWord wh = BraidWord::parse(
            "6: 4 3 2 -3 -4 5 3 2 1 1 -2 -3 5 4 3 -4 -5 3 2 -3 2 1 -2");
        CHECK(alexander_closure(wh) == Laurent1(1));
    }
    SUBCASE("hopf link") {
        bool centered = true;
        Laurent1 d = alexander_closure(BraidWord::parse("2: 1 1"), &centered);
        CHECK_FALSE(centered);
        CHECK(d.breadth() == 1);
        CHECK(d.eval_at_one() == 0);
        CHECK(d.terms().rbegin()->second > 0);
    }
    SUBCASE("split link") {
        CHECK(alexander_closure(BraidWord(2)).is_zero());
        CHECK(alexander_closure(BraidWord::parse("3: 1")).is_zero());
    }
}

TEST_CASE("knot normalization: palindromic with value 1 at t=1") {
    std::mt19937 rng(37);
    int done = 0;
    while (done < 50) {
        BraidWord b = random_word(rng);
        if (b.components() != 1) continue;
        ++done;
        Laurent1 d = alexander_closure(b);
        REQUIRE_FALSE(d.is_zero());
        CHECK(d.eval_at_one() == 1);
        CHECK(d.is_palindromic());
    }
}

TEST_CASE("markov invariance of the closure polynomial") {
    std::mt19937 rng(41);
    for (int it = 0; it < 50; ++it) {
        BraidWord b = random_word(rng);
        Laurent1 d = alexander_closure(b);
        std::uniform_int_distribution<int> sg(1, b.strands() - 1);
        int g = sg(rng);
        CHECK(alexander_closure(b.conjugated(rng() % 2 ? g : -g)) == d);
        CHECK(alexander_closure(b.stabilized(true)) == d);
        CHECK(alexander_closure(b.stabilized(false)) == d);
    }
}

TEST_CASE("breadth") {
    CHECK(breadth(Laurent1(1)) == 0);
    Laurent1 tref = Laurent1::t() - Laurent1(1) + Laurent1::term(1, -1);
    CHECK(breadth(tref) == 2);
    CHECK(breadth(tref.squared_variable()) == 2 * breadth(tref));
    CHECK_THROWS_AS(breadth(Laurent1()), ZeroPolynomial);
}
