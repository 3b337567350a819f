#pragma once

// Quadratic orders: fundamental units, root-of-unity counts, class numbers
// (imaginary via reduced-form counting, real via continued-fraction cycles).

#include "quadcong/cfrac.hpp"

namespace quadcong {

struct FundamentalUnit {
    Int q, r;  // eps = q + r * omega_delta, q >= 0, r >= 1
    int norm;  // +1 or -1
};

struct OrderInfo {
    Int delta;
    Int d;       // fundamental part
    Int f;       // conductor
    int sigma;   // 0 if delta even, 1 if odd
    Int unit_q, unit_r;  // real case only
    int unit_norm;       // real case only
    Int h;       // wide class number
    Int h_plus;  // narrow class number (real case)
    int w;       // roots of unity (imaginary case)
};

// sigma_delta + sqrt(delta) over 2, the standard module generator.
QuadIrr omega(const Int& delta);

// Smallest unit > 1 of O_delta, in the omega_delta basis. Found as the
// least power of the maximal order's unit with integral coordinates.
FundamentalUnit fundamental_unit(const Int& delta);

int roots_of_unity_count(const Int& delta);

// Wide class number for delta < 0: count of reduced primitive forms.
Int class_number_imag(const Int& delta);

// All reduced quadratic irrationals of discriminant delta > 0, sorted.
std::vector<QuadIrr> reduced_irrationals(const Int& delta);

// Partition of reduced_irrationals into continued-fraction cycles, each
// listed in step order. One cycle per wide class.
std::vector<std::vector<QuadIrr>> reduced_cycles(const Int& delta);

Int narrow_class_number_real(const Int& delta);
Int wide_class_number_real(const Int& delta);

OrderInfo order_info(const Int& delta);

}  // namespace quadcong
