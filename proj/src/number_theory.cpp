#include "omegalab/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace omegalab {

// ---- prime oracle -----------------------------------------------------------

PrimeIndexer::PrimeIndexer(unsigned long bound) : bound_(bound) {
    if (bound > 100000000UL)
        throw CapExceeded("PrimeIndexer: sieve bound exceeds cap");
    std::vector<bool> composite(bound + 1, false);
    for (unsigned long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes_.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
}

unsigned long PrimeIndexer::kth_prime(unsigned long k) const {
    if (k < 1 || k > primes_.size())
        throw std::out_of_range("PrimeIndexer: prime index " + std::to_string(k) +
                                " outside sieve");
    return primes_[k - 1];
}

PrimeIndexer primes_upto(unsigned long bound) { return PrimeIndexer(bound); }

bool is_prime_trial(const ExactInt& n) {
    if (n < 2) return false;
    for (ExactInt d = 2; d * d <= n; ++d)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

// ---- representations ----------------------------------------------------------

ExactInt mersenne_via_omega(unsigned long p, unsigned long cap) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument("mersenne_via_omega: p must be odd and positive");
    return omega_ratio(OmegaPoint<ExactInt>(ExactInt(-2), ExactInt(-5)), p, cap);
}

ExactInt fermat_via_omega(unsigned long n) {
    if (n < 1 || n > 6)
        throw CapExceeded("fermat_via_omega: n must be within 1..6");
    unsigned long idx = 1UL << n;
    return omega_ratio(OmegaPoint<ExactInt>(ExactInt(-2), ExactInt(-5)), idx);
}

ExactInt lucas_via_omega(unsigned long n, unsigned long cap) {
    return omega_ratio(OmegaPoint<ExactInt>(ExactInt(-1), ExactInt(-3)), n, cap);
}

ExactInt fib_lucas_oscillating(unsigned long n, unsigned long cap) {
    return omega_ratio(OmegaPoint<ExactInt>(ExactInt(1), ExactInt(-3)), n, cap);
}

// Lambda_r(k) = (n-r-k) Lambda_r(k-1) + 2 (n-1-2r-delta(n)) Lambda_{r+1}(k-1),
// Lambda_r(0) = 1, depth floor((n-1)/2)
ExactInt lambda_variant_top(unsigned long n, unsigned long cap) {
    if (n < 1) throw std::invalid_argument("lambda_variant_top: n must be >= 1");
    const unsigned long depth = (n - 1) / 2;
    if (depth > cap) throw CapExceeded("lambda_variant_top: floor((n-1)/2) exceeds cap");
    const long dn = delta(n);
    std::vector<ExactInt> prev(depth + 1, 1), cur;
    for (unsigned long k = 1; k <= depth; ++k) {
        const unsigned long rows = depth - k + 1;
        cur.assign(rows, 0);
        for (unsigned long r = 0; r < rows; ++r) {
            long c1 = static_cast<long>(n) - static_cast<long>(r) - static_cast<long>(k);
            long c2 = static_cast<long>(n) - 1 - 2 * static_cast<long>(r) - dn;
            cur[r] = ExactInt(c1) * prev[r] + 2 * ExactInt(c2) * prev[r + 1];
        }
        prev.swap(cur);
    }
    return prev[0];
}

ExactInt fibonacci_via_lambda(unsigned long n, unsigned long cap) {
    ExactInt top = lambda_variant_top(n, cap);
    ExactInt denom = 1;
    for (unsigned long i = 1; i <= (n - 1) / 2; ++i) denom *= ExactInt(static_cast<long>(n - i));
    return exact_div(top, denom);
}

ExactRational chebyshev_T(unsigned long n, const ExactRational& x, unsigned long cap) {
    if (n == 0) return ExactRational(1);
    ExactRational xi = ExactRational(2) - ExactRational(4) * x * x;
    ExactRational value =
        omega_ratio(OmegaPoint<ExactRational>(ExactRational(1), xi), n, cap);
    if (n % 2 == 1) value *= x;
    if (n % 2 == 0) value /= 2;  // 2^{delta(n-1)}
    return value;
}

// ---- Mersenne test -------------------------------------------------------------

MersenneVerdict llm_is_mersenne_prime(unsigned long p, MersenneMethod method,
                                      unsigned long naive_cap, unsigned long fast_cap) {
    if (p < 5) throw std::invalid_argument("llm_is_mersenne_prime: p must be >= 5");
    if (!is_prime_trial(ExactInt(static_cast<long>(p))))
        throw std::invalid_argument("llm_is_mersenne_prime: p must be prime");
    if (method == MersenneMethod::naive && p > naive_cap)
        throw CapExceeded("llm_is_mersenne_prime: p exceeds naive cap");
    if (method == MersenneMethod::fast && p > fast_cap)
        throw CapExceeded("llm_is_mersenne_prime: p exceeds fast cap");

    ExactInt modulus = pow_int(2, p) - 1;
    ExactInt a = 1, b = 4;
    ExactInt residue;
    if (method == MersenneMethod::naive) {
        residue = psi_mod(a, b, 1UL << (p - 1), modulus);
    } else {
        ExactInt n = pow_int(2, p - 1);
        residue = psi_mod_fast(a, b, n, modulus);
    }
    MersenneVerdict v{p, modulus, residue, sgn(residue) == 0, method};

    // exact cross-check of the ratio-divisibility form for small p:
    // the (-2,-5) ratio at p gives 2^p-1; the (1,4) ratio at 2^{p-1} is
    // Psi(1,4,2^{p-1}); primality <=> the first divides the second
    if (p <= 13) {
        ExactInt lhs = mersenne_via_omega(p);
        if (lhs != modulus)
            throw std::logic_error("Mersenne representation mismatch at p=" + std::to_string(p));
        unsigned long n = 1UL << (p - 1);
        ExactInt rhs = omega_ratio(OmegaPoint<ExactInt>(ExactInt(1), ExactInt(4)), n);
        bool divides = mpz_divisible_p(rhs.get_mpz_t(), lhs.get_mpz_t());
        if (divides != v.is_prime)
            throw std::logic_error("Mersenne ratio cross-check mismatch at p=" +
                                   std::to_string(p));
    }
    return v;
}

bool llm_composite_witness(unsigned long p, int offset, unsigned long fast_cap) {
    if (p < 5 || !is_prime_trial(ExactInt(static_cast<long>(p))))
        throw std::invalid_argument("llm_composite_witness: p must be prime >= 5");
    if (offset != 1 && offset != -1)
        throw std::invalid_argument("llm_composite_witness: offset must be +1 or -1");
    if (p > fast_cap) throw CapExceeded("llm_composite_witness: p exceeds fast cap");
    ExactInt modulus = pow_int(2, p) - 1;
    ExactInt n = pow_int(2, p - 1) + offset;
    return sgn(psi_mod_fast(ExactInt(1), ExactInt(4), n, modulus)) == 0;
}

// ---- combinatorics and emergence ------------------------------------------------

bool combinatorial_identity_check(unsigned long n) {
    if (n < 1) throw std::invalid_argument("combinatorial_identity_check: n must be >= 1");
    ExactInt lhs = falling_product(n);
    // exponent floor(n/2) - delta(n+1) is never negative: delta(n+1)=1 only
    // for even n, where floor(n/2) >= 1
    ExactInt rhs = pow_int(2, n / 2 - static_cast<unsigned long>(delta(n + 1)));
    long base = static_cast<long>(n) + delta(n - 1);
    for (long t = base - 2; t >= 1; t -= 2) rhs *= ExactInt(t);
    return lhs == rhs;
}

EmergenceReport second_fundamental_check(const PrimeIndexer& primes, unsigned long k,
                                         const std::vector<std::pair<long, long>>& points,
                                         const std::vector<long>& coeffs) {
    if (points.size() != coeffs.size())
        throw std::invalid_argument("second_fundamental_check: points/coeffs size mismatch");
    EmergenceReport rep;
    rep.k = k;
    rep.p_k = primes.kth_prime(k);
    rep.p_next = primes.kth_prime(k + 1);
    ExactInt pnext(static_cast<long>(rep.p_next));
    rep.ratios_divisible = true;
    rep.combination = 0;
    bool first = true;
    for (size_t i = 0; i < points.size(); ++i) {
        OmegaPoint<ExactInt> pt(ExactInt(points[i].first), ExactInt(points[i].second));
        ExactInt r = emergence_ratio_at(primes, k, pt);
        if (first) {
            rep.ratio = r;
            first = false;
        } else if (r != rep.ratio) {
            rep.ratios_divisible = false;  // Eq. space444 says this cannot happen
        }
        if (!mpz_divisible_p(r.get_mpz_t(), pnext.get_mpz_t())) rep.ratios_divisible = false;
        rep.combination += ExactInt(coeffs[i]) * r;
    }
    rep.combination_divisible =
        mpz_divisible_p(rep.combination.get_mpz_t(), pnext.get_mpz_t());
    return rep;
}

bool third_fundamental_check(const PrimeIndexer& primes, unsigned long k) {
    OmegaPoint<ExactInt> pt(ExactInt(1), ExactInt(1));  // always in omega(2 p_k): |Psi| in {1,2}
    ExactInt r = emergence_ratio_at(primes, k, pt);
    ExactInt prod = 1;
    for (unsigned long i = 2; i <= k + 1; ++i)
        prod *= ExactInt(static_cast<long>(primes.kth_prime(i)));
    return mpz_divisible_p(r.get_mpz_t(), prod.get_mpz_t());
}

bool gen1_check(const PrimeIndexer& primes, unsigned long k) {
    if (k < 3)
        throw std::invalid_argument("gen1_check: k must be >= 3 (quotient is 1 at k=2)");
    unsigned long pk = primes.kth_prime(k);
    OmegaPoint<ExactInt> pt(ExactInt(1), ExactInt(1));
    ExactInt r = emergence_ratio_at(primes, k, pt);
    ExactInt denom = ExactInt(static_cast<long>(pk)) * ExactInt(static_cast<long>(2 * pk - 1)) *
                     ExactInt(static_cast<long>(2 * pk - 2));
    ExactInt q = exact_div(r, denom);
    ExactInt pnext(static_cast<long>(primes.kth_prime(k + 1)));
    return mpz_divisible_p(q.get_mpz_t(), pnext.get_mpz_t());
}

bool gen2_check(const PrimeIndexer& primes, unsigned long k, long alpha, long beta) {
    unsigned long pk = primes.kth_prime(k);
    OmegaPoint<ExactInt> pt{ExactInt(alpha), ExactInt(beta)};
    ExactInt top = omega_top(pt, 2 * pk);
    ExactInt pnext(static_cast<long>(primes.kth_prime(k + 1)));
    return mpz_divisible_p(top.get_mpz_t(), pnext.get_mpz_t());
}

bool prime_fib_check(const PrimeIndexer& primes, unsigned long k) {
    unsigned long pk = primes.kth_prime(k);
    ExactInt top = lambda_variant_top(2 * pk);
    ExactInt ratio = exact_div(top, fibonacci_oracle(2 * pk));
    ExactInt pnext(static_cast<long>(primes.kth_prime(k + 1)));
    return mpz_divisible_p(ratio.get_mpz_t(), pnext.get_mpz_t());
}

bool bertrand_check(const PrimeIndexer& primes, unsigned long k) {
    if (k < 2) throw std::invalid_argument("bertrand_check: k must be >= 2");
    unsigned long pk = primes.kth_prime(k);
    ExactInt pnext(static_cast<long>(primes.kth_prime(k + 1)));

    // space44, empty product at k=2 so only checked from k >= 3
    if (k >= 3) {
        ExactInt prod = 1;
        for (unsigned long t = pk + 1; t + 3 <= 2 * pk; ++t) prod *= ExactInt(static_cast<long>(t));
        if (!mpz_divisible_p(prod.get_mpz_t(), pnext.get_mpz_t())) return false;
    }
    // space44e: p_{k+1} | p_k (p_k+1) ... (2 p_k - 1)
    ExactInt prod_e = 1;
    for (unsigned long t = pk; t <= 2 * pk - 1; ++t) prod_e *= ExactInt(static_cast<long>(t));
    if (!mpz_divisible_p(prod_e.get_mpz_t(), pnext.get_mpz_t())) return false;

    // clear: prod_{i=2}^{k} p_i | (2p_k-1)(2p_k-3)...(3)(1)
    ExactInt odd_fac = 1;
    for (long t = static_cast<long>(2 * pk - 1); t >= 1; t -= 2) odd_fac *= ExactInt(t);
    ExactInt prod_small = 1;
    for (unsigned long i = 2; i <= k; ++i)
        prod_small *= ExactInt(static_cast<long>(primes.kth_prime(i)));
    if (!mpz_divisible_p(odd_fac.get_mpz_t(), prod_small.get_mpz_t())) return false;

    // clear4: prod_{i=2}^{k+1} p_i | (2p_k-1)(2p_k-2)...(p_k)
    ExactInt fp = falling_product(2 * pk);
    ExactInt prod_big = prod_small * pnext;
    return mpz_divisible_p(fp.get_mpz_t(), prod_big.get_mpz_t());
}

// ---- periodicity tables -----------------------------------------------------------

ExactInt fibonacci_oracle(unsigned long n) {
    ExactInt a = 0, b = 1;  // F(0), F(1)
    for (unsigned long i = 0; i < n; ++i) {
        ExactInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

ExactInt lucas_oracle(unsigned long n) {
    ExactInt a = 2, b = 1;  // L(0), L(1)
    for (unsigned long i = 0; i < n; ++i) {
        ExactInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

long psi11_expected(unsigned long n) {
    switch (n % 6) {
        case 0: return 2;
        case 1: case 5: return 1;
        case 2: case 4: return -1;
        default: return -2;  // 3
    }
}

long psi10_expected(unsigned long n) {
    switch (n % 8) {
        case 0: return 2;
        case 1: case 7: return 1;
        case 2: case 6: return 0;
        case 3: case 5: return -1;
        default: return -2;  // 4
    }
}

long psi1m1_expected(unsigned long n) {
    switch (n % 12) {
        case 0: return 2;
        case 1: case 2: case 10: case 11: return 1;
        case 3: case 9: return 0;
        case 4: case 5: case 7: case 8: return -1;
        default: return -2;  // 6
    }
}

QuadElem psi_sqrt5_expected(unsigned long n) {
    auto F = [](unsigned long m) { return ExactRational(fibonacci_oracle(m)); };
    auto L = [](unsigned long m) { return ExactRational(lucas_oracle(m)); };
    switch (n % 4) {
        case 0: return QuadElem(5, L(n / 2), 0);
        case 1: return QuadElem(5, L((n + 1) / 2), F((n - 1) / 2));
        case 2: return QuadElem(5, 0, -F(n / 2));
        default: return QuadElem(5, -L((n - 1) / 2), -F((n + 1) / 2));
    }
}

std::vector<PeriodicityRow> psi_periodicity_tables(unsigned long n_max,
                                                   unsigned long quad_max) {
    std::vector<PeriodicityRow> rows;
    rows.reserve(n_max);
    for (unsigned long n = 1; n <= n_max; ++n) {
        PeriodicityRow row;
        row.n = n;
        row.at_1_1 = omega_ratio(OmegaPoint<ExactInt>(ExactInt(1), ExactInt(1)), n);
        row.at_1_0 = omega_ratio(OmegaPoint<ExactInt>(ExactInt(1), ExactInt(0)), n);
        row.at_1_m1 = omega_ratio(OmegaPoint<ExactInt>(ExactInt(1), ExactInt(-1)), n);
        row.at_1_m2 = omega_ratio(OmegaPoint<ExactInt>(ExactInt(1), ExactInt(-2)), n);
        row.at_1_2 = omega_ratio(OmegaPoint<ExactInt>(ExactInt(1), ExactInt(2)), n);

        bool ok = row.at_1_1 == psi11_expected(n) && row.at_1_0 == psi10_expected(n) &&
                  row.at_1_m1 == psi1m1_expected(n);
        // Psi(1,-2,n) = 2^{delta(n+1)}
        ok = ok && row.at_1_m2 == pow_int(2, static_cast<unsigned long>(delta(n + 1)));
        // Psi(1,2,n) = (-1)^{floor(n/2)} 2^{delta(n-1)} n^{delta(n)}
        {
            ExactInt expect = pow_int(2, static_cast<unsigned long>(delta(n - 1))) *
                              pow_int(ExactInt(static_cast<long>(n)),
                                      static_cast<unsigned long>(delta(n)));
            if ((n / 2) % 2 == 1) expect = -expect;
            ok = ok && row.at_1_2 == expect;
        }
        if (n <= quad_max) {
            QuadElem got = omega_ratio(
                OmegaPoint<QuadElem>(QuadElem(5, 1, 0), QuadElem(5, 0, 1)), n);
            ok = ok && got == psi_sqrt5_expected(n);
        }
        row.ok = ok;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool periodicity_all_ok(const std::vector<PeriodicityRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const PeriodicityRow& r) { return r.ok; });
}

}  // namespace omegalab
