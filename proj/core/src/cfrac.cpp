#include "quadcong/cfrac.hpp"

#include <map>

namespace quadcong {

QuadIrr make_quad_irr(const Int& a, const Int& b, const Int& delta) {
    if (a == 0) throw std::invalid_argument("make_quad_irr: a = 0");
    if (delta <= 0 || is_square(delta) || !is_quadratic_discriminant(delta))
        throw std::invalid_argument("make_quad_irr: delta must be a positive non-square discriminant");
    Int num = b * b - delta;
    Int den = 4 * a;
    if (num % den != 0)
        throw std::invalid_argument("make_quad_irr: not a discriminant-delta irrational");
    Int c = num / den;
    Int g = gcd(gcd(a, b), c);
    if (g != 1) throw std::invalid_argument("make_quad_irr: imprimitive");
    return QuadIrr{a, b, delta, c};
}

QuadIrr conjugate(const QuadIrr& xi) { return QuadIrr{-xi.a, -xi.b, xi.delta, -xi.c}; }

QuadIrr minus_conjugate(const QuadIrr& xi) { return QuadIrr{xi.a, -xi.b, xi.delta, xi.c}; }

QuadIrr negate(const QuadIrr& xi) { return QuadIrr{-xi.a, xi.b, xi.delta, -xi.c}; }

bool is_reduced(const QuadIrr& xi) {
    const Int& a = xi.a;
    const Int& b = xi.b;
    const Int& D = xi.delta;
    // xi > 1  <=>  sqrt(D) >< 2a - b depending on sign of a
    // xi' < 0 <=>  sqrt(D) >< b
    // xi' > -1 <=> sqrt(D) >< 2a + b
    if (a > 0)
        return cmp_sqrt(D, 2 * a - b) > 0 && cmp_sqrt(D, b) > 0 && cmp_sqrt(D, 2 * a + b) < 0;
    return cmp_sqrt(D, 2 * a - b) < 0 && cmp_sqrt(D, b) < 0 && cmp_sqrt(D, 2 * a + b) > 0;
}

std::pair<Int, QuadIrr> cf_step(const QuadIrr& xi) {
    Int v = floor_quad(xi.a, xi.b, xi.delta);
    Int a1 = -xi.c + xi.b * v - xi.a * v * v;
    Int b1 = -xi.b + 2 * xi.a * v;
    // c1 = -a: the discriminant and primitivity are preserved by the step
    return {v, QuadIrr{a1, b1, xi.delta, -xi.a}};
}

CFExpansion expand(const QuadIrr& xi) {
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<Int> digits;
    QuadIrr cur = xi;
    for (;;) {
        auto key = std::make_pair(cur.a, cur.b);
        auto it = seen.find(key);
        if (it != seen.end()) {
            size_t j = it->second;
            CFExpansion cf;
            cf.preperiod.assign(digits.begin(), digits.begin() + j);
            cf.period.assign(digits.begin() + j, digits.end());
            return cf;
        }
        seen.emplace(key, digits.size());
        auto [v, next] = cf_step(cur);
        digits.push_back(v);
        cur = next;
    }
}

Int hirzebruch_psi(const CFExpansion& cf) {
    size_t l = cf.period.size();
    if (l % 2 != 0) return 0;
    size_t k = cf.preperiod.size();
    Int sum = 0;
    for (size_t i = 0; i < l; ++i) {
        if ((k + i) % 2 == 0)
            sum += cf.period[i];
        else
            sum -= cf.period[i];
    }
    return sum;
}

Int hirzebruch_psi(const QuadIrr& xi) { return hirzebruch_psi(expand(xi)); }

QuadIrr opposite(const QuadIrr& xi) {
    Int v = floor_quad(xi.a, xi.b, xi.delta);
    Int b1 = 2 * xi.a * v - xi.b;
    Int c1 = (b1 * b1 - xi.delta) / (4 * xi.a);
    return QuadIrr{xi.a, b1, xi.delta, c1};
}

}  // namespace quadcong
