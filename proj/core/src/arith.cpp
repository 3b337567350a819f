#include "quadcong/arith.hpp"

namespace quadcong {

namespace {

// x mod m, always in [0, m)
inline Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long mod4(const Int& x) { return mod_pos(x, 4).get_si(); }
inline long mod8(const Int& x) { return mod_pos(x, 8).get_si(); }

inline bool even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

}  // namespace

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int cmp_sqrt(const Int& delta, const Int& x) {
    if (x < 0) return 1;
    Int x2 = x * x;
    return delta > x2 ? 1 : (delta < x2 ? -1 : 0);
}

bool is_quadratic_discriminant(const Int& delta) {
    long m = mod4(delta);
    if (m != 0 && m != 1) return false;
    if (delta >= 0 && is_square(delta)) return false;
    return true;
}

bool is_fundamental_discriminant(const Int& d) {
    if (!is_quadratic_discriminant(d)) return false;
    if (mod4(d) == 1) {
        Int m = abs(d);
        for (const auto& [p, e] : factorize(m))
            if (e > 1) return false;
        return true;
    }
    Int m = d / 4;
    long m4 = mod4(m);
    if (m4 != 2 && m4 != 3) return false;
    for (const auto& [p, e] : factorize(m))
        if (e > 1) return false;
    return true;
}

int kronecker(const Int& a_in, const Int& n_in) {
    Int a = a_in, n = n_in;
    if (n == 0) return (abs(a) == 1) ? 1 : 0;
    if (even(a) && even(n)) return 0;
    int res = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) res = -res;
    }
    // split off the even part of n: (a|2)^v
    unsigned v = 0;
    while (even(n)) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        long m = mod8(a);
        if (m == 3 || m == 5) res = -res;
    }
    // n odd positive: Jacobi symbol loop
    a = mod_pos(a, n);
    while (a != 0) {
        while (even(a)) {
            a >>= 1;
            long m = mod8(n);
            if (m == 3 || m == 5) res = -res;
        }
        if (mod4(a) == 3 && mod4(n) == 3) res = -res;
        std::swap(a, n);
        a = mod_pos(a, n);
    }
    return (n == 1) ? res : 0;
}

DiscriminantSplit discriminant_split(const Int& delta) {
    if (!is_quadratic_discriminant(delta))
        throw std::invalid_argument("discriminant_split: not a quadratic discriminant");
    // squarefree kernel of delta, carrying the sign
    Int k = delta < 0 ? Int(-1) : Int(1);
    Int f = 1;
    for (const auto& [p, e] : factorize(delta)) {
        if (e & 1) k *= p;
        for (unsigned i = 0; i + 1 < e; i += 2) f *= p;
    }
    Int d;
    if (mod4(k) == 1) {
        d = k;
    } else {
        // delta = 0 mod 4 is forced here, so f is even
        d = 4 * k;
        if (!even(f)) throw std::logic_error("discriminant_split: parity");
        f /= 2;
    }
    return DiscriminantSplit{d, f};
}

std::vector<Int> prime_discriminants(const Int& d) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("prime_discriminants: not fundamental");
    std::vector<Int> out;
    Int odd_prod = 1;
    for (const auto& [p, e] : factorize(d)) {
        if (p == 2) continue;
        Int qs = (mod4(p) == 1) ? p : -p;
        out.push_back(qs);
        odd_prod *= qs;
    }
    Int two_part = d / odd_prod;
    if (two_part != 1) {
        if (two_part != -4 && two_part != 8 && two_part != -8)
            throw std::logic_error("prime_discriminants: bad 2-part");
        out.insert(out.begin(), two_part);
    }
    return out;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = abs(n);
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

Int floor_quad(const Int& a, const Int& b, const Int& delta) {
    if (a == 0) throw std::invalid_argument("floor_quad: a = 0");
    if (delta <= 0 || is_square(delta))
        throw std::invalid_argument("floor_quad: delta must be positive non-square");
    Int s = isqrt(delta);
    // sqrt(delta) lies strictly between s and s+1, so no integer separates
    // (b+s)/(2a) from (b+sqrt(delta))/(2a) when a>0 (and the shifted
    // numerator b+s+1 plays that role when a<0).
    Int num = (a > 0) ? Int(b + s) : Int(b + s + 1);
    Int q;
    Int den = 2 * a;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace quadcong
