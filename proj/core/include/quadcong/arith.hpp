#pragma once

// Exact integer utilities underpinning everything else: integer square
// roots, the fully general Kronecker symbol, discriminant decomposition,
// and trial-division factorization. All arithmetic is arbitrary precision
// (GMP); nothing here ever touches floating point.

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace quadcong {

using Int = mpz_class;
using Rat = mpq_class;  // always canonicalized: lowest terms, denominator >= 1

// delta = d * f^2 with d fundamental.
struct DiscriminantSplit {
    Int d;
    Int f;
};

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// True iff n is a perfect square (n >= 0 required by caller semantics;
// negative n returns false).
bool is_square(const Int& n);

// Compare sqrt(delta) with the integer x: -1, 0, +1. delta must be a
// positive non-square, so the result is never 0.
int cmp_sqrt(const Int& delta, const Int& x);

// non-square and congruent to 0 or 1 mod 4
bool is_quadratic_discriminant(const Int& delta);
bool is_fundamental_discriminant(const Int& d);

// Fully general Kronecker symbol (a|n), including n <= 0 and n even.
int kronecker(const Int& a, const Int& n);

DiscriminantSplit discriminant_split(const Int& delta);

// The unique multiset of prime fundamental discriminants whose product is d.
std::vector<Int> prime_discriminants(const Int& d);

// Trial-division factorization of |n|, ascending primes; n != 0.
// The sign is not reported (callers handle it).
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// Exact floor((b + sqrt(delta)) / (2a)) for delta > 0 non-square, a != 0.
Int floor_quad(const Int& a, const Int& b, const Int& delta);

}  // namespace quadcong
