#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadcong/cfrac.hpp"

using namespace quadcong;

TEST_CASE("make_quad_irr validation") {
    QuadIrr x = make_quad_irr(1, 0, 96);
    CHECK(x.c == -24);
    CHECK_THROWS_AS(make_quad_irr(1, 1, 12), std::invalid_argument);   // parity
    CHECK_THROWS_AS(make_quad_irr(3, 2, 96), std::invalid_argument);   // c not integral
    CHECK_THROWS_AS(make_quad_irr(2, 2, 96), std::invalid_argument);   // c not integral
    CHECK_THROWS_AS(make_quad_irr(0, 2, 96), std::invalid_argument);   // a = 0
    CHECK_THROWS_AS(make_quad_irr(1, 0, 100), std::invalid_argument);  // square
}

TEST_CASE("conjugates and negation") {
    QuadIrr x = make_quad_irr(4, 4, 96);
    QuadIrr cj = conjugate(x);
    CHECK(cj.a == -4);
    CHECK(cj.b == -4);
    QuadIrr mc = minus_conjugate(x);
    CHECK(mc.a == 4);
    CHECK(mc.b == -4);
    QuadIrr ng = negate(x);
    CHECK(ng.a == -4);
    CHECK(ng.b == 4);
    CHECK(conjugate(conjugate(x)) == x);
    CHECK(negate(negate(x)) == x);
}

TEST_CASE("is_reduced") {
    // sqrt(6)+2 over 1? states from the sqrt(24) expansion
    CHECK_FALSE(is_reduced(make_quad_irr(1, 0, 24)));  // sqrt(6) has conj < -1
    CHECK(is_reduced(make_quad_irr(2, 4, 24)));
    CHECK(is_reduced(make_quad_irr(1, 4, 24)));
    CHECK(is_reduced(make_quad_irr(4, 4, 96)));
    CHECK_FALSE(is_reduced(make_quad_irr(-1, 0, 24)));  // negative
    CHECK_FALSE(is_reduced(make_quad_irr(1, -4, 24)));  // less than 0
}

TEST_CASE("cf_step") {
    QuadIrr x = make_quad_irr(1, 0, 24);  // sqrt(6)
    auto [v0, x1] = cf_step(x);
    CHECK(v0 == 2);
    CHECK(x1.a == 2);
    CHECK(x1.b == 4);
    auto [v1, x2] = cf_step(x1);
    CHECK(v1 == 2);
    CHECK(x2.a == 1);
    CHECK(x2.b == 4);
    auto [v2, x3] = cf_step(x2);
    CHECK(v2 == 4);
    CHECK(x3 == x1);  // period closed
    // delta and primitivity preserved, digit >= 1 on reduced states
    CHECK(x1.delta == 24);
    CHECK(gcd(gcd(x1.a, x1.b), x1.c) == 1);
}

TEST_CASE("expand") {
    CFExpansion cf = expand(make_quad_irr(1, 0, 12));  // sqrt(3) = [1; 1,2]
    CHECK(cf.preperiod == std::vector<Int>{1});
    CHECK(cf.period == std::vector<Int>{1, 2});
    cf = expand(make_quad_irr(1, 1, 5));  // golden ratio, purely periodic
    CHECK(cf.preperiod.empty());
    CHECK(cf.period == std::vector<Int>{1});
    // purely periodic exactly on reduced irrationals
    for (long b : {0L, 4L}) {
        QuadIrr x = make_quad_irr(1, b, 24);
        CHECK(expand(x).preperiod.empty() == is_reduced(x));
    }
}

TEST_CASE("hirzebruch_psi") {
    CHECK(hirzebruch_psi(make_quad_irr(1, 0, 96)) == 7);   // 2 sqrt(6)
    CHECK(hirzebruch_psi(make_quad_irr(4, 4, 96)) == 1);   // (1+sqrt(6))/2
    CHECK(hirzebruch_psi(make_quad_irr(1, 0, 12)) == 1);   // sqrt(3)
    CHECK(hirzebruch_psi(make_quad_irr(1, 1, 5)) == 0);    // odd period
    CHECK(hirzebruch_psi(make_quad_irr(1, 0, 8)) == 0);    // sqrt(2) = [1; 2]
    // psi values feeding the p = 163 row
    CHECK(hirzebruch_psi(make_quad_irr(1, 0, 32 * 163)) == 63);
    CHECK(hirzebruch_psi(make_quad_irr(4, 4, 32 * 163)) == 9);
}

TEST_CASE("psi is a class invariant at even shifts") {
    QuadIrr x = make_quad_irr(1, 0, 96);
    Int psi = hirzebruch_psi(x);
    QuadIrr cur = cf_step(cf_step(x).second).second;  // two steps: same proper class
    for (int i = 0; i < 3; ++i) {
        CHECK(hirzebruch_psi(cur) == psi);
        cur = cf_step(cf_step(cur).second).second;
    }
}

TEST_CASE("opposite reverses the period") {
    QuadIrr x = make_quad_irr(2, 4, 24);  // reduced
    CFExpansion cf = expand(x);
    CFExpansion op = expand(opposite(x));
    CHECK(op.preperiod.empty());
    std::vector<Int> rev = cf.period;
    std::reverse(rev.begin(), rev.end());
    // reversal up to cyclic rotation, anchored at v0
    CHECK(op.period.size() == rev.size());
    // for xi = [v0, v1, ..., v_{l-1}], xi^op = [v0, v_{l-1}, ..., v1]
    std::vector<Int> expect;
    expect.push_back(cf.period[0]);
    for (size_t i = cf.period.size() - 1; i >= 1; --i) expect.push_back(cf.period[i]);
    CHECK(op.period == expect);
}
