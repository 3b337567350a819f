#pragma once

// Dedekind sums, the SL2(Z) matrix invariant n_M, the matrix M_xi attached
// to a quadratic irrational, and n(xi) -- the Dedekind-sum route to the
// Hirzebruch sum.

#include "quadcong/orders.hpp"

namespace quadcong {

struct Mat2 {
    Int x, y, z, w;

    Int det() const { return x * w - y * z; }
    Int trace() const { return x + w; }
    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return Mat2{l.x * r.x + l.y * r.z, l.x * r.y + l.y * r.w,
                    l.z * r.x + l.w * r.z, l.z * r.y + l.w * r.w};
    }
    friend bool operator==(const Mat2& l, const Mat2& r) {
        return l.x == r.x && l.y == r.y && l.z == r.z && l.w == r.w;
    }
};

// ((y)) = y - floor(y) - 1/2 for non-integers, 0 on integers.
Rat sawtooth(const Rat& y);

// s(h, k) in O(log k) arithmetic steps via reciprocity; gcd(h,k) = 1.
Rat dedekind_sum(const Int& h, const Int& k);

// Literal O(k) summation of the definition; test oracle only, k <= 10^6.
Rat dedekind_sum_naive(const Int& h, const Int& k);

// n_M = (x+w)/z - sign(z)(3 + 12 s(w, |z|)); requires det M = 1, z != 0.
Rat n_of_matrix(const Mat2& m);

// M_xi for the fundamental unit eps = q + r*omega_delta:
// the unique integral matrix with eps*xi = x*xi + y and eps = z*xi + w.
Mat2 matrix_of(const QuadIrr& xi, const FundamentalUnit& unit);

// n(xi) = n_{M_xi}; requires delta > 0 with N(eps_delta) = 1.
Rat n_of(const QuadIrr& xi);
Rat n_of(const QuadIrr& xi, const FundamentalUnit& unit);

}  // namespace quadcong
