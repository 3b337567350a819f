#pragma once

// Form-class groups of real quadratic orders: composition via the
// three-congruence system, equivalence testing over CF cycles, genus
// characters, the theta Euler factor, the Kaneko-Mizuno-Zagier identity,
// ambiguous classes of O_32p, and the conductor lift.

#include "quadcong/orders.hpp"

namespace quadcong {

struct ClassTable {
    Int delta;
    std::vector<QuadIrr> narrow_reps;  // one per proper class
    std::vector<QuadIrr> wide_reps;    // one per wide class
    QuadIrr principal;                 // canonical rep of [omega_delta]
};

struct KmzResult {
    Rat lhs;
    Int rhs;
    bool equal;
};

struct AmbiguousData {
    QuadIrr principal_rep;  // class of omega_32p
    QuadIrr am_rep;         // class of (2+sqrt(8p))/4
    // (a, b) of each of the 8 ambiguous ideals (a, (b+sqrt(32p))/2),
    // paired with true when the ideal falls in the principal class.
    std::vector<std::pair<std::pair<Int, Int>, bool>> ideal_classes;
};

// Gauss composition: solves the congruence system for b3 by iterated CRT.
QuadIrr compose(const QuadIrr& xi, const QuadIrr& eta);

// Canonical proper-class representative: lexicographically least (a, b)
// among even-step states on the CF cycle reached from xi.
QuadIrr reduce_rep(const QuadIrr& xi);

bool properly_equivalent(const QuadIrr& xi, const QuadIrr& eta);
bool widely_equivalent(const QuadIrr& xi, const QuadIrr& eta);

ClassTable class_table(const Int& delta);

// chi^(delta)_{d1,d2}(xi), the product of Kronecker characters over the
// prime fundamental discriminants dividing d1.
int genus_character(const Int& d1, const Int& d2, const QuadIrr& xi);

// Euler-type factor over primes dividing the conductor f; empty product = 1.
Rat theta(const Int& d1, const Int& d2, const Int& f);

// Both sides of 24 h(d1)h(d2)/(w(d1)w(d2)) theta = sum over wide classes
// of chi * Psi, evaluated exactly.
KmzResult kmz_check(const Int& d1, const Int& d2, const Int& f);

// Conductor-2 lift on forms, (a,b,c) -> (a,2b,4c): discriminant 8p to 32p.
// Requires odd a.
QuadIrr lift_class(const QuadIrr& xi);

// The two ambiguous classes of O_32p and the partition of its 8 ambiguous
// ideals between them; checked against the known tables per p mod 8.
AmbiguousData ambiguous_data(const Int& p);

}  // namespace quadcong
