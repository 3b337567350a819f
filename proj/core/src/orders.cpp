#include "quadcong/orders.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quadcong {

namespace {

// Fundamental unit of O_D as (T + U*sqrt(D))/2, computed from one minimal
// continued-fraction period of (the reduced tail of) omega_D. The period
// matrix stabilizes the reduced state xi, and eps = q_{l-1} xi + q_{l-2}.
struct HalfUnit {
    Int T, U;
    int norm;
};

HalfUnit unit_half_coords(const Int& D) {
    QuadIrr cur = omega(D);
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<Int> digits;
    std::vector<QuadIrr> states;
    for (;;) {
        auto key = std::make_pair(cur.a, cur.b);
        auto it = seen.find(key);
        if (it != seen.end()) {
            size_t j = it->second;
            const QuadIrr& xi = states[j];
            // continuant denominators q_{l-1}, q_{l-2} of the period
            Int q1 = 0, q2 = 1;  // q_{n}, q_{n-1}, seeded at q_{-1}, q_{-2}
            for (size_t i = j; i < digits.size(); ++i) {
                Int t = digits[i] * q1 + q2;
                q2 = q1;
                q1 = t;
            }
            Int num = q1 * xi.b + 2 * q2 * xi.a;
            if (num % xi.a != 0 || q1 % xi.a != 0)
                throw std::logic_error("unit_half_coords: non-integral unit");
            HalfUnit u;
            u.T = num / xi.a;
            u.U = q1 / xi.a;
            u.norm = ((digits.size() - j) % 2 == 0) ? 1 : -1;
            if (u.T * u.T - u.U * u.U * D != 4 * u.norm)
                throw std::logic_error("unit_half_coords: norm check failed");
            return u;
        }
        seen.emplace(key, digits.size());
        states.push_back(cur);
        auto [v, next] = cf_step(cur);
        digits.push_back(v);
        cur = next;
    }
}

}  // namespace

QuadIrr omega(const Int& delta) {
    int sigma = mpz_odd_p(delta.get_mpz_t()) ? 1 : 0;
    return make_quad_irr(1, sigma, delta);
}

FundamentalUnit fundamental_unit(const Int& delta) {
    if (delta <= 0 || is_square(delta) || !is_quadratic_discriminant(delta))
        throw std::invalid_argument("fundamental_unit: delta must be a positive non-square discriminant");
    DiscriminantSplit sp = discriminant_split(delta);
    HalfUnit base = unit_half_coords(sp.d);
    int sigma = mpz_odd_p(delta.get_mpz_t()) ? 1 : 0;
    Int T = base.T, U = base.U;
    int norm = base.norm;
    for (int k = 1; k <= 64; ++k) {
        if (U % sp.f == 0) {
            Int r = U / sp.f;
            Int num = T - sigma * r;
            if (num % 2 == 0) return FundamentalUnit{num / 2, r, norm};
        }
        // next power of the maximal-order unit
        Int T2 = (T * base.T + U * base.U * sp.d) / 2;
        Int U2 = (T * base.U + U * base.T) / 2;
        T = T2;
        U = U2;
        norm *= base.norm;
    }
    throw std::logic_error("fundamental_unit: no power within cap landed in the order");
}

int roots_of_unity_count(const Int& delta) {
    if (delta >= 0) throw std::invalid_argument("roots_of_unity_count: delta must be negative");
    if (delta == -3) return 6;
    if (delta == -4) return 4;
    return 2;
}

Int class_number_imag(const Int& delta) {
    if (delta >= 0 || !is_quadratic_discriminant(delta))
        throw std::invalid_argument("class_number_imag: delta must be a negative discriminant");
    Int count = 0;
    Int amax = isqrt(-delta / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if ((b - delta) % 2 != 0) continue;
            Int num = b * b - delta;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if ((abs(b) == a || a == c) && b < 0) continue;  // unreachable with b >= -a+1
            if (gcd(gcd(a, b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

std::vector<QuadIrr> reduced_irrationals(const Int& delta) {
    if (delta <= 0 || is_square(delta) || !is_quadratic_discriminant(delta))
        throw std::invalid_argument("reduced_irrationals: delta must be a positive non-square discriminant");
    Int s = isqrt(delta);
    std::vector<QuadIrr> out;
    for (Int b = 1; b <= s; ++b) {
        if ((delta - b) % 2 != 0) continue;
        Int n = delta - b * b;
        // b = delta mod 2 makes n divisible by 4
        Int m = n / 4;
        for (Int a = 1; a * a <= m; ++a) {
            if (m % a != 0) continue;
            for (const Int& aa : {a, Int(m / a)}) {
                // reduced iff sqrt(delta) - b < 2a < sqrt(delta) + b, exactly:
                if (!(2 * aa - b <= s && 2 * aa + b > s)) continue;
                Int c = -(m / aa);
                if (gcd(gcd(aa, b), c) != 1) continue;
                out.push_back(QuadIrr{aa, b, delta, c});
                if (a * a == m) break;  // avoid the duplicate divisor
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<QuadIrr>> reduced_cycles(const Int& delta) {
    std::vector<QuadIrr> red = reduced_irrationals(delta);
    std::set<std::pair<Int, Int>> unvisited;
    for (const auto& x : red) unvisited.insert({x.a, x.b});
    std::vector<std::vector<QuadIrr>> cycles;
    for (const auto& x : red) {
        if (!unvisited.count({x.a, x.b})) continue;
        std::vector<QuadIrr> cyc;
        QuadIrr cur = x;
        do {
            cyc.push_back(cur);
            unvisited.erase({cur.a, cur.b});
            cur = cf_step(cur).second;
        } while (!(cur == x));
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

Int narrow_class_number_real(const Int& delta) {
    auto cycles = reduced_cycles(delta);
    int norm = fundamental_unit(delta).norm;
    Int narrow = 0;
    for (const auto& cyc : cycles) {
        bool even_len = cyc.size() % 2 == 0;
        if (even_len != (norm == 1))
            throw std::logic_error("narrow_class_number_real: cycle parity contradicts unit norm");
        narrow += even_len ? 2 : 1;
    }
    return narrow;
}

Int wide_class_number_real(const Int& delta) {
    return Int(reduced_cycles(delta).size());
}

OrderInfo order_info(const Int& delta) {
    if (!is_quadratic_discriminant(delta))
        throw std::invalid_argument("order_info: not a quadratic discriminant");
    OrderInfo info;
    info.delta = delta;
    DiscriminantSplit sp = discriminant_split(delta);
    info.d = sp.d;
    info.f = sp.f;
    info.sigma = mpz_odd_p(delta.get_mpz_t()) ? 1 : 0;
    if (delta > 0) {
        FundamentalUnit u = fundamental_unit(delta);
        info.unit_q = u.q;
        info.unit_r = u.r;
        info.unit_norm = u.norm;
        info.h = wide_class_number_real(delta);
        info.h_plus = (u.norm == 1) ? Int(2 * info.h) : info.h;
        info.w = 0;
    } else {
        info.unit_q = 0;
        info.unit_r = 0;
        info.unit_norm = 0;
        info.h = class_number_imag(delta);
        info.h_plus = info.h;
        info.w = roots_of_unity_count(delta);
    }
    return info;
}

}  // namespace quadcong
