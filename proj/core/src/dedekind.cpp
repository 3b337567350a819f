#include "quadcong/dedekind.hpp"

namespace quadcong {

Rat sawtooth(const Rat& y) {
    if (y.get_den() == 1) return Rat(0);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    Rat r = y - Rat(fl) - Rat(1, 2);
    r.canonicalize();
    return r;
}

Rat dedekind_sum(const Int& h_in, const Int& k_in) {
    if (k_in < 1) throw std::invalid_argument("dedekind_sum: k must be positive");
    if (gcd(h_in, k_in) != 1) throw std::invalid_argument("dedekind_sum: gcd(h,k) != 1");
    // periodicity in h, then the reciprocity/Euclid descent:
    //   s(h,k) = (h^2+k^2+1)/(12hk) - 1/4 - s(k mod h, h)
    Rat acc = 0;
    Int h, k = k_in;
    mpz_fdiv_r(h.get_mpz_t(), h_in.get_mpz_t(), k_in.get_mpz_t());
    int sign = 1;
    while (h != 0 && k != 1) {
        Rat rec(h * h + k * k + 1, 12 * h * k);
        rec.canonicalize();
        rec -= Rat(1, 4);
        acc += sign * rec;
        Int h2 = k % h;
        k = h;
        h = h2;
        sign = -sign;
    }
    acc.canonicalize();
    return acc;
}

Rat dedekind_sum_naive(const Int& h, const Int& k) {
    if (k < 1 || k > 1000000) throw std::invalid_argument("dedekind_sum_naive: k out of range");
    if (gcd(h, k) != 1) throw std::invalid_argument("dedekind_sum_naive: gcd(h,k) != 1");
    Rat acc = 0;
    for (Int m = 1; m < k; ++m) {
        Rat t1(m, k);
        t1.canonicalize();
        Rat t2(h * m, k);
        t2.canonicalize();
        acc += sawtooth(t1) * sawtooth(t2);
    }
    acc.canonicalize();
    return acc;
}

Rat n_of_matrix(const Mat2& m) {
    if (m.z == 0) throw std::invalid_argument("n_of_matrix: z = 0");
    if (m.det() != 1) throw std::invalid_argument("n_of_matrix: det != 1");
    int sgn = m.z > 0 ? 1 : -1;
    Rat lead(m.x + m.w, m.z);
    lead.canonicalize();
    return lead - sgn * (Rat(3) + 12 * dedekind_sum(m.w, abs(m.z)));
}

Mat2 matrix_of(const QuadIrr& xi, const FundamentalUnit& unit) {
    Int sigma = mpz_odd_p(xi.delta.get_mpz_t()) ? 1 : 0;
    const Int& q = unit.q;
    const Int& r = unit.r;
    Mat2 k{q + r * sigma, r * (xi.delta - sigma) / 4, r, q};
    Int half = (xi.b - sigma) / 2;
    Mat2 u{1, half, 0, xi.a};
    Mat2 adj{xi.a, -half, 0, 1};  // a * U^{-1}
    Mat2 prod = u * k * adj;
    if (prod.x % xi.a != 0 || prod.y % xi.a != 0 || prod.z % xi.a != 0 || prod.w % xi.a != 0)
        throw std::logic_error("matrix_of: conjugation left non-integral entries");
    Mat2 m{prod.x / xi.a, prod.y / xi.a, prod.z / xi.a, prod.w / xi.a};
    if (m.det() != 1) throw std::logic_error("matrix_of: determinant != 1");
    return m;
}

Rat n_of(const QuadIrr& xi, const FundamentalUnit& unit) {
    if (unit.norm != 1)
        throw std::invalid_argument("n_of: fundamental unit must have norm +1");
    return n_of_matrix(matrix_of(xi, unit));
}

Rat n_of(const QuadIrr& xi) { return n_of(xi, fundamental_unit(xi.delta)); }

}  // namespace quadcong
