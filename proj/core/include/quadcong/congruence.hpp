#pragma once

// The headline congruences as executable checks: the H1/H2 invariants per
// prime, the mod-16 identity for pairs of negative fundamental
// discriminants, the Redei 4-rank, and parallel prime sweeps.

#include "quadcong/classgroup.hpp"

#include <array>
#include <string>

namespace quadcong {

struct CongruenceRow {
    Int p;
    int p_mod8;            // 3 or 7
    Int psi1;              // Psi(2 sqrt(2p))
    Int psi2;              // Psi((1 + sqrt(2p)) / 2)
    Int h8p, hneg8p, h32p;
    Rat H1;                // h8p (psi1 - psi2)/3 - hneg8p
    Rat H2;                // 2 h8p psi1/3 - hneg8p
    bool thm12_ok, thm13_ok, conj_ok, thm_redei_ok;
    std::string H1_fact, H2_fact;
};

struct RedeiResult {
    int e1, e2;     // matrix rows (e1 e1) and (e2 e2) over F2
    int rank;       // 0 or 1
    int four_rank;  // 1 - rank
};

enum class Thm11Case { i, ii, iii };

struct Thm11Report {
    Int checked = 0;
    std::vector<std::array<Int, 2>> failures;  // (d1, d2) pairs
};

// v2(x) for x != 0; INT_MAX for x = 0.
int val2(const Rat& x);

// x = y (mod 2^k) read 2-adically: x - y has odd denominator and
// numerator valuation >= k.
bool congruent_2adic(const Rat& x, const Rat& y, int k);

// "2^5·13" style, ascending primes, "^-1" for denominator primes,
// "0" and "1" as-is, leading "-" if negative.
std::string factor_string(const Rat& x);

// Primes p = 3 (mod 4) in [pmin, pmax], ascending.
std::vector<Int> primes_3mod4(const Int& pmin, const Int& pmax);

std::pair<Int, Int> psi_pair(const Int& p);

RedeiResult redei_4rank(const Int& p);

CongruenceRow row(const Int& p);

// One row per prime p = 3 (mod 4) in [pmin, pmax], in prime order.
// jobs = 0 picks the hardware concurrency.
std::vector<CongruenceRow> sweep(const Int& pmin, const Int& pmax, unsigned jobs = 0);

// Exact evaluation of 24 h(d1)h(d2)/(w(d1)w(d2)) = h(d1 d2) Psi(omega) mod 16.
bool thm11_pair_ok(const Int& d1, const Int& d2);

// Case (i): (-4, -p), p = 3 (mod 4); (ii): (-4, -4p), p = 1 (mod 4);
// (iii): (-p1, -p2), distinct p1 = p2 = 3 (mod 4). Primes run up to pmax;
// pairs with |d1 d2| > product_max are skipped when product_max > 0.
Thm11Report verify_thm11(Thm11Case which, const Int& pmax,
                         const Int& product_max = 0, unsigned jobs = 0);

}  // namespace quadcong
