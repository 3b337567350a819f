#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadcong/congruence.hpp"

#include <climits>

using namespace quadcong;

TEST_CASE("val2 and 2-adic congruence") {
    CHECK(val2(Rat(0)) == INT_MAX);
    CHECK(val2(Rat(8)) == 3);
    CHECK(val2(Rat(8, 3)) == 3);
    CHECK(val2(Rat(3, 8)) == -3);
    CHECK(val2(Rat(-12)) == 2);
    CHECK(congruent_2adic(Rat(8, 3), 0, 3));
    CHECK_FALSE(congruent_2adic(Rat(8, 3), 0, 4));
    CHECK(congruent_2adic(Rat(12), 4, 3));
    CHECK_FALSE(congruent_2adic(Rat(1, 2), 0, 0));  // even denominator
    CHECK(congruent_2adic(Rat(5), Rat(5), 100));
}

TEST_CASE("factor_string") {
    CHECK(factor_string(Rat(0)) == "0");
    CHECK(factor_string(Rat(1)) == "1");
    CHECK(factor_string(Rat(-1)) == "-1");
    CHECK(factor_string(Rat(160)) == "2^5·5");
    CHECK(factor_string(Rat(8, 3)) == "2^3·3^-1");
    CHECK(factor_string(Rat(12)) == "2^2·3");
    CHECK(factor_string(Rat(-12)) == "-2^2·3");
    CHECK(factor_string(Rat(97)) == "97");
    CHECK(factor_string(Rat(1, 4)) == "2^-2");
}

TEST_CASE("primes_3mod4") {
    using V = std::vector<Int>;
    CHECK(primes_3mod4(3, 23) == V{3, 7, 11, 19, 23});
    CHECK(primes_3mod4(5, 23) == V{7, 11, 19, 23});
    CHECK(primes_3mod4(3, 3) == V{3});
    CHECK(primes_3mod4(3, 1000).size() == 87);
}

TEST_CASE("psi_pair") {
    CHECK(psi_pair(3) == std::pair<Int, Int>{7, 1});
    CHECK(psi_pair(163) == std::pair<Int, Int>{63, 9});
    CHECK(psi_pair(967) == std::pair<Int, Int>{192, 60});
    CHECK_THROWS_AS(psi_pair(5), std::invalid_argument);
    CHECK_THROWS_AS(psi_pair(15), std::invalid_argument);
}

TEST_CASE("redei_4rank") {
    RedeiResult r = redei_4rank(3);
    CHECK(r.e1 == 1);
    CHECK(r.e2 == 1);
    CHECK(r.rank == 1);
    CHECK(r.four_rank == 0);
    r = redei_4rank(7);
    CHECK(r.e1 == 0);
    CHECK(r.e2 == 0);
    CHECK(r.rank == 0);
    CHECK(r.four_rank == 1);
    CHECK(redei_4rank(71).four_rank == 1);
    CHECK(redei_4rank(11).four_rank == 0);
}

TEST_CASE("row golden values") {
    CongruenceRow r = row(3);
    CHECK(r.p_mod8 == 3);
    CHECK(r.psi1 == 7);
    CHECK(r.psi2 == 1);
    CHECK(r.h8p == 1);
    CHECK(r.hneg8p == 2);
    CHECK(r.h32p == 2);
    CHECK(r.H1 == 0);
    CHECK(r.H2 == Rat(8, 3));
    CHECK(r.H1_fact == "0");
    CHECK(r.H2_fact == "2^3·3^-1");
    CHECK(r.thm12_ok);
    CHECK(r.thm13_ok);
    CHECK(r.conj_ok);
    CHECK(r.thm_redei_ok);

    r = row(491);
    CHECK(r.H1 == 160);
    CHECK(r.H2 == 360);
    CHECK(r.H1_fact == "2^5·5");
    CHECK(r.H2_fact == "2^3·3^2·5");

    r = row(823);
    CHECK(r.p_mod8 == 7);
    CHECK(r.H1 == 64);
    CHECK(r.H2 == 292);
    CHECK(r.H2_fact == "2^2·73");
    CHECK(r.thm13_ok);  // 292 = 4 mod 8
}

TEST_CASE("sweep") {
    std::vector<CongruenceRow> rows = sweep(3, 23);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].p == 3);
    CHECK(rows[4].p == 23);
    CHECK(rows[4].H2 == 12);
    std::vector<CongruenceRow> single = sweep(3, 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0].p == 3);
    CHECK_THROWS_AS(sweep(10, 3), std::invalid_argument);
}

TEST_CASE("sweep is deterministic across job counts") {
    std::vector<CongruenceRow> a = sweep(3, 200, 1);
    std::vector<CongruenceRow> b = sweep(3, 200, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].p == b[i].p);
        CHECK(a[i].H1 == b[i].H1);
        CHECK(a[i].H2 == b[i].H2);
        CHECK(a[i].H1_fact == b[i].H1_fact);
        CHECK(a[i].H2_fact == b[i].H2_fact);
    }
}

TEST_CASE("thm11 small sweeps") {
    CHECK(thm11_pair_ok(-4, -3));
    CHECK(thm11_pair_ok(-4, -7));
    CHECK(thm11_pair_ok(-3, -7));
    Thm11Report rep = verify_thm11(Thm11Case::i, 100);
    CHECK(rep.checked == Int((long)primes_3mod4(3, 100).size()));
    CHECK(rep.failures.empty());
    rep = verify_thm11(Thm11Case::ii, 100);
    CHECK(rep.failures.empty());
    rep = verify_thm11(Thm11Case::iii, 50, 1000);
    CHECK(rep.failures.empty());
    // pairs are capped by the product bound
    Thm11Report capped = verify_thm11(Thm11Case::iii, 50, 100);
    CHECK(capped.checked < rep.checked);
}
