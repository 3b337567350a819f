#include "quadcong/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <thread>

namespace quadcong {

namespace {

unsigned effective_jobs(unsigned jobs) {
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    return jobs == 0 ? 1 : jobs;
}

// index-parallel map with deterministic slot assignment
template <typename Work>
void parallel_for(size_t n, unsigned jobs, Work work) {
    jobs = effective_jobs(jobs);
    if (jobs == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs && t < n; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

void check_prime_3mod4(const Int& p) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), p.get_mpz_t(), 4);
    if (r != 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("expected a prime p = 3 mod 4");
}

}  // namespace

int val2(const Rat& x) {
    if (x == 0) return INT_MAX;
    int vn = (int)mpz_scan1(x.get_num().get_mpz_t(), 0);
    int vd = (int)mpz_scan1(x.get_den().get_mpz_t(), 0);
    return vn - vd;
}

bool congruent_2adic(const Rat& x, const Rat& y, int k) {
    Rat d = x - y;
    d.canonicalize();
    if (d == 0) return true;
    if (mpz_even_p(d.get_den().get_mpz_t())) return false;
    return val2(d) >= k;
}

std::string factor_string(const Rat& x) {
    if (x == 0) return "0";
    std::string out;
    if (x < 0) out += "-";
    // merged exponent list: numerator primes positive, denominator negative
    std::vector<std::pair<Int, long>> exps;
    Int num = abs(x.get_num());
    if (num != 1)
        for (const auto& [p, e] : factorize(num)) exps.push_back({p, (long)e});
    const Int& den = x.get_den();
    if (den != 1)
        for (const auto& [p, e] : factorize(den)) exps.push_back({p, -(long)e});
    if (exps.empty()) return out + "1";
    std::sort(exps.begin(), exps.end());
    bool first = true;
    for (const auto& [p, e] : exps) {
        if (!first) out += "·";
        first = false;
        out += p.get_str();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::vector<Int> primes_3mod4(const Int& pmin, const Int& pmax) {
    std::vector<Int> out;
    if (pmax < 3) return out;
    unsigned long n = pmax.get_ui();
    std::vector<bool> comp(n + 1, false);
    for (unsigned long i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (unsigned long j = i * i; j <= n; j += i) comp[j] = true;
    for (unsigned long i = 3; i <= n; i += 4)
        if (!comp[i] && pmin <= (long)i) out.push_back(Int((long)i));
    return out;
}

std::pair<Int, Int> psi_pair(const Int& p) {
    check_prime_3mod4(p);
    Int delta = 32 * p;
    return {hirzebruch_psi(make_quad_irr(1, 0, delta)),
            hirzebruch_psi(make_quad_irr(4, 4, delta))};
}

RedeiResult redei_4rank(const Int& p) {
    check_prime_3mod4(p);
    RedeiResult r;
    r.e1 = (1 - kronecker(2, p)) / 2;
    r.e2 = (1 - kronecker(-p, 2)) / 2;
    r.rank = (r.e1 || r.e2) ? 1 : 0;
    r.four_rank = 1 - r.rank;
    return r;
}

CongruenceRow row(const Int& p) {
    check_prime_3mod4(p);
    CongruenceRow r;
    r.p = p;
    Int m8;
    mpz_fdiv_r_ui(m8.get_mpz_t(), p.get_mpz_t(), 8);
    r.p_mod8 = (int)m8.get_si();
    std::tie(r.psi1, r.psi2) = psi_pair(p);
    r.h8p = wide_class_number_real(8 * p);
    r.hneg8p = class_number_imag(-8 * p);
    r.h32p = wide_class_number_real(32 * p);
    r.H1 = Rat(r.h8p * (r.psi1 - r.psi2), 3) - Rat(r.hneg8p);
    r.H1.canonicalize();
    r.H2 = Rat(2 * r.h8p * r.psi1, 3) - Rat(r.hneg8p);
    r.H2.canonicalize();
    r.thm12_ok = congruent_2adic(r.H1, 0, 4);
    r.conj_ok = congruent_2adic(r.H1, 0, 5);
    r.thm13_ok = (r.p_mod8 == 3) ? congruent_2adic(r.H2, 0, 3)
                                 : congruent_2adic(r.H2, 4, 3);
    RedeiResult rd = redei_4rank(p);
    Int h4;
    mpz_fdiv_r_ui(h4.get_mpz_t(), r.hneg8p.get_mpz_t(), 4);
    r.thm_redei_ok = ((rd.four_rank == 0) == (h4 == 2)) &&
                     ((rd.four_rank == 0) == (r.p_mod8 == 3));
    r.H1_fact = factor_string(r.H1);
    r.H2_fact = factor_string(r.H2);
    return r;
}

std::vector<CongruenceRow> sweep(const Int& pmin, const Int& pmax, unsigned jobs) {
    if (pmin > pmax) throw std::invalid_argument("sweep: pmin > pmax");
    std::vector<Int> ps = primes_3mod4(pmin, pmax);
    std::vector<CongruenceRow> rows(ps.size());
    parallel_for(ps.size(), jobs, [&](size_t i) { rows[i] = row(ps[i]); });
    return rows;
}

bool thm11_pair_ok(const Int& d1, const Int& d2) {
    Rat lhs(24 * class_number_imag(d1) * class_number_imag(d2),
            roots_of_unity_count(d1) * roots_of_unity_count(d2));
    lhs.canonicalize();
    Int delta = d1 * d2;
    Rat rhs(wide_class_number_real(delta) * hirzebruch_psi(omega(delta)));
    return congruent_2adic(lhs, rhs, 4);
}

Thm11Report verify_thm11(Thm11Case which, const Int& pmax,
                         const Int& product_max, unsigned jobs) {
    std::vector<std::array<Int, 2>> pairs;
    auto admit = [&](const Int& d1, const Int& d2) {
        if (product_max > 0 && d1 * d2 > product_max) return;
        pairs.push_back({d1, d2});
    };
    if (which == Thm11Case::i) {
        for (const Int& p : primes_3mod4(3, pmax)) admit(-4, -p);
    } else if (which == Thm11Case::ii) {
        // primes = 1 mod 4 up to pmax
        for (Int p = 5; p <= pmax; p += 4)
            if (mpz_probab_prime_p(p.get_mpz_t(), 30)) admit(-4, -4 * p);
    } else {
        std::vector<Int> ps = primes_3mod4(3, pmax);
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) admit(-ps[i], -ps[j]);
    }
    Thm11Report rep;
    rep.checked = Int((long)pairs.size());
    std::vector<char> ok(pairs.size());
    parallel_for(pairs.size(), jobs,
                 [&](size_t i) { ok[i] = thm11_pair_ok(pairs[i][0], pairs[i][1]); });
    for (size_t i = 0; i < pairs.size(); ++i)
        if (!ok[i]) rep.failures.push_back(pairs[i]);
    return rep;
}

}  // namespace quadcong
