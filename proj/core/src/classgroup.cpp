#include "quadcong/classgroup.hpp"

#include <algorithm>
#include <map>

namespace quadcong {

namespace {

inline Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Running CRT solution x = x0 (mod m); merges coef*x = rhs (mod M).
struct Crt {
    Int x0 = 0, m = 1;

    void merge(const Int& coef, const Int& rhs, const Int& M) {
        // substitute x = x0 + m*t:  (coef*m) t = rhs - coef*x0 (mod M)
        Int A = coef * m;
        Int B = rhs - coef * x0;
        Int g = gcd(A, M);
        if (B % g != 0) throw std::logic_error("compose: inconsistent congruence system");
        Int M2 = M / g;
        if (M2 > 1) {
            Int Ar = mod_pos(A / g, M2), Br = mod_pos(B / g, M2), inv;
            if (mpz_invert(inv.get_mpz_t(), Ar.get_mpz_t(), M2.get_mpz_t()) == 0)
                throw std::logic_error("compose: non-invertible after gcd reduction");
            Int t0 = mod_pos(Br * inv, M2);
            x0 += m * t0;
            m *= M2;
            x0 = mod_pos(x0, m);
        }
    }
};

}  // namespace

QuadIrr compose(const QuadIrr& xi, const QuadIrr& eta) {
    if (xi.delta != eta.delta) throw std::invalid_argument("compose: discriminants differ");
    if (xi.a <= 0 || eta.a <= 0) throw std::invalid_argument("compose: operands must have a > 0");
    const Int& D = xi.delta;
    Int half = (xi.b + eta.b) / 2;  // b1+b2 is always even (b = delta mod 2)
    Int e = gcd(gcd(xi.a, eta.a), half);
    Int a3 = xi.a * eta.a / (e * e);

    Crt crt;
    crt.merge(1, xi.b, 2 * xi.a / e);
    crt.merge(1, eta.b, 2 * eta.a / e);
    crt.merge(half / e, (D + xi.b * eta.b) / 2 / e, 2 * a3);

    Int b3 = mod_pos(crt.x0, 2 * a3);
    // verify the full system on the reduced representative
    if (mod_pos(b3 - xi.b, 2 * xi.a / e) != 0 || mod_pos(b3 - eta.b, 2 * eta.a / e) != 0 ||
        mod_pos((half / e) * b3 - (D + xi.b * eta.b) / 2 / e, 2 * a3) != 0)
        throw std::logic_error("compose: solution check failed");
    return make_quad_irr(a3, b3, D);
}

QuadIrr reduce_rep(const QuadIrr& xi) {
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<QuadIrr> states;
    QuadIrr cur = xi;
    size_t j;
    for (;;) {
        auto key = std::make_pair(cur.a, cur.b);
        auto it = seen.find(key);
        if (it != seen.end()) {
            j = it->second;
            break;
        }
        seen.emplace(key, states.size());
        states.push_back(cur);
        cur = cf_step(cur).second;
    }
    size_t l = states.size() - j;
    const QuadIrr* best = nullptr;
    for (size_t idx = j; idx < j + 2 * l; ++idx) {
        if (idx % 2 != 0) continue;
        const QuadIrr& cand = states[j + (idx - j) % l];
        if (!best || cand < *best) best = &cand;
    }
    return *best;
}

bool properly_equivalent(const QuadIrr& xi, const QuadIrr& eta) {
    if (xi.delta != eta.delta) return false;
    return reduce_rep(xi) == reduce_rep(eta);
}

bool widely_equivalent(const QuadIrr& xi, const QuadIrr& eta) {
    if (xi.delta != eta.delta) return false;
    return properly_equivalent(xi, eta) || properly_equivalent(negate(xi), eta);
}

ClassTable class_table(const Int& delta) {
    ClassTable table;
    table.delta = delta;
    for (const auto& cyc : reduced_cycles(delta)) {
        size_t l = cyc.size();
        // wide rep: least state on the whole cycle
        table.wide_reps.push_back(*std::min_element(cyc.begin(), cyc.end()));
        if (l % 2 == 0) {
            QuadIrr even = cyc[0], odd = cyc[1];
            for (size_t i = 2; i < l; i += 2) {
                even = std::min(even, cyc[i]);
                odd = std::min(odd, cyc[i + 1]);
            }
            table.narrow_reps.push_back(even);
            table.narrow_reps.push_back(odd);
        } else {
            table.narrow_reps.push_back(*std::min_element(cyc.begin(), cyc.end()));
        }
    }
    std::sort(table.wide_reps.begin(), table.wide_reps.end());
    std::sort(table.narrow_reps.begin(), table.narrow_reps.end());
    table.principal = reduce_rep(omega(delta));
    return table;
}

int genus_character(const Int& d1, const Int& d2, const QuadIrr& xi) {
    Int prod = d1 * d2;
    if (prod <= 0 || xi.delta % prod != 0 || !is_square(xi.delta / prod))
        throw std::invalid_argument("genus_character: delta is not d1*d2*f^2");
    int result = 1;
    for (const Int& qs : prime_discriminants(d1)) {
        Int q = (qs == -4 || qs == 8 || qs == -8) ? Int(2) : abs(qs);
        bool a_ok = gcd(xi.a, q) == 1;
        bool c_ok = gcd(xi.c, q) == 1;
        if (!a_ok && !c_ok)
            throw std::logic_error("genus_character: character undefined on representative");
        int va = a_ok ? kronecker(qs, xi.a) : 0;
        int vc = c_ok ? kronecker(qs, xi.c) : 0;
        if (a_ok && c_ok && va != vc)
            throw std::logic_error("genus_character: a/c values disagree");
        result *= a_ok ? va : vc;
    }
    return result;
}

Rat theta(const Int& d1, const Int& d2, const Int& f) {
    if (f < 1) throw std::invalid_argument("theta: conductor must be positive");
    Rat t(1);
    if (f == 1) return t;
    for (const auto& [p, mp] : factorize(f)) {
        Int x1 = kronecker(d1, p), x2 = kronecker(d2, p);
        Int pk = 1;  // p^(mp-1)
        for (unsigned i = 1; i < mp; ++i) pk *= p;
        Int num = (1 - x1) * (1 - x2) - pk * (p - x1) * (p - x2);
        Rat factor(num, 1 - p);
        factor.canonicalize();
        t *= factor;
    }
    t.canonicalize();
    return t;
}

KmzResult kmz_check(const Int& d1, const Int& d2, const Int& f) {
    if (d1 == d2 || d1 >= 0 || d2 >= 0 ||
        !is_fundamental_discriminant(d1) || !is_fundamental_discriminant(d2))
        throw std::invalid_argument("kmz_check: need distinct negative fundamental discriminants");
    Int delta = d1 * d2 * f * f;
    if (fundamental_unit(delta).norm != 1)
        throw std::logic_error("kmz_check: N(eps) = -1 contradicts the identity's hypothesis");
    Rat lhs(24 * class_number_imag(d1) * class_number_imag(d2),
            roots_of_unity_count(d1) * roots_of_unity_count(d2));
    lhs.canonicalize();
    lhs *= theta(d1, d2, f);
    Int rhs = 0;
    for (const auto& cyc : reduced_cycles(delta))
        rhs += genus_character(d1, d2, cyc[0]) * hirzebruch_psi(cyc[0]);
    return KmzResult{lhs, rhs, lhs == Rat(rhs)};
}

QuadIrr lift_class(const QuadIrr& xi) {
    if (mpz_even_p(xi.a.get_mpz_t()))
        throw std::invalid_argument("lift_class: representative must have odd a");
    return make_quad_irr(xi.a, 2 * xi.b, 4 * xi.delta);
}

AmbiguousData ambiguous_data(const Int& p) {
    if (mod_pos(p, 4) != 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("ambiguous_data: p must be a prime = 3 mod 4");
    Int delta = 32 * p;
    AmbiguousData data;
    data.principal_rep = make_quad_irr(1, 0, delta);
    data.am_rep = make_quad_irr(4, 4, delta);
    if (widely_equivalent(data.principal_rep, data.am_rep))
        throw std::logic_error("ambiguous_data: the two ambiguous classes coincide");

    const std::pair<Int, Int> ideals[8] = {
        {1, 0}, {8, 0}, {p, 0}, {8 * p, 0},
        {4, 4}, {8, 8}, {4 * p, 4 * p}, {8 * p, 8 * p}};
    bool p3mod8 = mod_pos(p, 8) == 3;
    for (const auto& [a, b] : ideals) {
        QuadIrr irr = make_quad_irr(a, b, delta);
        bool in_principal = widely_equivalent(irr, data.principal_rep);
        if (!in_principal && !widely_equivalent(irr, data.am_rep))
            throw std::logic_error("ambiguous_data: ideal outside the ambiguous classes");
        // expected partition by p mod 8
        bool expect_principal;
        if (b == 0)
            expect_principal = p3mod8 ? (a == 1 || a == 8 * p) : true;
        else
            expect_principal = p3mod8 ? (a == 8 || a == 4 * p) : false;
        if (in_principal != expect_principal)
            throw std::logic_error("ambiguous_data: partition contradicts the known tables");
        data.ideal_classes.push_back({{a, b}, in_principal});
    }
    return data;
}

}  // namespace quadcong
