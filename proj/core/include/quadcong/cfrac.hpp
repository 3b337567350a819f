#pragma once

// Quadratic irrationals (b + sqrt(delta)) / (2a) in canonical integer form,
// their continued-fraction expansions, and Hirzebruch sums.

#include "quadcong/arith.hpp"

#include <compare>
#include <vector>

namespace quadcong {

struct QuadIrr {
    Int a;      // nonzero
    Int b;
    Int delta;  // positive non-square discriminant
    Int c;      // (b^2 - delta) / (4a), always integral

    friend bool operator==(const QuadIrr& lhs, const QuadIrr& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.delta == rhs.delta;
    }
    // lexicographic on (a, b); only meaningful within one discriminant
    friend bool operator<(const QuadIrr& lhs, const QuadIrr& rhs) {
        if (lhs.a != rhs.a) return lhs.a < rhs.a;
        return lhs.b < rhs.b;
    }
};

struct CFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;  // nonempty, minimal cycle, entries >= 1
};

// Validates integrality of c, primitivity gcd(a,b,c)=1, and b = delta mod 2.
QuadIrr make_quad_irr(const Int& a, const Int& b, const Int& delta);

// xi' = (-b + sqrt(delta)) / (-2a)
QuadIrr conjugate(const QuadIrr& xi);

// -xi' = (-b + sqrt(delta)) / (2a)
QuadIrr minus_conjugate(const QuadIrr& xi);

// -xi = (b + sqrt(delta)) / (-2a)
QuadIrr negate(const QuadIrr& xi);

// xi > 1 and -1 < xi' < 0, decided exactly
bool is_reduced(const QuadIrr& xi);

// One continued-fraction step: v = floor(xi), next = 1/(xi - v).
std::pair<Int, QuadIrr> cf_step(const QuadIrr& xi);

// Minimal preperiod and minimal period, by first state repetition.
CFExpansion expand(const QuadIrr& xi);

// Alternating period sum sum_i (-1)^(k+i) v_i for even period length l,
// 0 for odd l; k is the preperiod length.
Int hirzebruch_psi(const QuadIrr& xi);
Int hirzebruch_psi(const CFExpansion& cf);

// xi^op = floor(xi) - xi'
QuadIrr opposite(const QuadIrr& xi);

}  // namespace quadcong
